#include "gkmchar/json_io.hpp"

#include <json.hpp>

namespace gkmchar {

namespace {

using Json = nlohmann::ordered_json;

// Exact rational split into numerator/denominator; values that fit in
// int64 are emitted as JSON numbers, anything larger as a decimal string.
void put_rat(Json& obj, const Rat& c) {
    const mpz_class num = c.get_num();
    const mpz_class den = c.get_den();
    if (num.fits_slong_p())
        obj["num"] = static_cast<std::int64_t>(num.get_si());
    else
        obj["num"] = num.get_str();
    if (den.fits_slong_p())
        obj["den"] = static_cast<std::int64_t>(den.get_si());
    else
        obj["den"] = den.get_str();
}

// LaurentPoly as a list of {coords, num, den}, sorted by coords.
Json laurent_json(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [exp, c] : f.terms()) {
        Json t;
        t["coords"] = Json(exp.coords);
        put_rat(t, c);
        terms.push_back(std::move(t));
    }
    return terms;
}

// Positive root as a combination of simple roots, e.g. "a1+2a2".
std::string root_label(const RootSystem& rs, std::size_t positive_index) {
    const Root& r = rs.positive[positive_index];
    std::string out;
    for (std::size_t i = 0; i < r.simple_coords.size(); ++i) {
        const std::int64_t c = r.simple_coords[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        const std::int64_t a = c > 0 ? c : -c;
        if (a != 1) out += std::to_string(a);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string laurent_to_json(const LaurentPoly& f) { return laurent_json(f).dump(2); }

std::string poly_to_json(const Poly& f) {
    Json terms = Json::array();
    for (const auto& [deg, c] : f.terms()) {
        Json t;
        t["degrees"] = Json(deg);
        put_rat(t, c);
        terms.push_back(std::move(t));
    }
    return terms.dump(2);
}

std::string qseries_to_json(const QSeries& f) {
    Json j;
    j["min_order"] = f.min_order();
    j["N"] = f.truncation_order();
    Json coeffs = Json::array();
    for (std::int64_t m = f.min_order(); m <= f.truncation_order(); ++m)
        coeffs.push_back(laurent_json(f.coeff(m)));
    j["coeffs"] = std::move(coeffs);
    return j.dump(2);
}

std::string root_system_to_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.type.to_string();
    j["rank"] = rs.rank();
    Json cartan = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan.at(i, k));
        cartan.push_back(std::move(row));
    }
    j["cartan_matrix"] = std::move(cartan);
    j["symmetrizer"] = Json(rs.symmetrizer);
    j["dual_coxeter"] = dual_coxeter_number(rs);
    j["weyl_order"] = weyl_order(rs);
    Json roots = Json::array();
    for (std::size_t i = 0; i < rs.positive.size(); ++i) {
        const Root& r = rs.positive[i];
        Json jr;
        jr["index"] = i;
        jr["label"] = root_label(rs, i);
        jr["coords"] = Json(r.weight.coords);
        jr["coroot"] = Json(r.coroot.coords);
        jr["simple_coords"] = Json(r.simple_coords);
        jr["height"] = r.height;
        roots.push_back(std::move(jr));
    }
    j["positive_roots"] = std::move(roots);
    j["rho"] = Json(rs.rho.coords);
    return j.dump(2);
}

std::string moment_graph_to_json(const MomentGraph& g, const RootSystem& rs) {
    Json j;
    j["type"] = rs.type.to_string();
    Json sub = Json::array();
    for (std::size_t i : g.pair.sub_simple) sub.push_back(i);
    j["sub_positive_indices"] = std::move(sub);
    j["num_vertices"] = g.num_vertices();
    j["num_edges"] = g.num_edges();
    Json verts = Json::array();
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        Json v;
        v["index"] = i;
        v["word"] = rs.word_string(g.vertices[i]);
        v["length"] = g.vertices[i].length;
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const MomentEdge& e : g.edges) {
        Json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["label_index"] = e.label;
        je["label"] = root_label(rs, e.label);
        je["flow_source"] = e.flow_source;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j.dump(2);
}

std::string moment_graph_to_dot(const MomentGraph& g, const RootSystem& rs) {
    std::string out = "graph moment_graph {\n";
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" + rs.word_string(g.vertices[i]) + "\"];\n";
    for (const MomentEdge& e : g.edges)
        out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + " [label=\"" +
               root_label(rs, e.label) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace gkmchar
