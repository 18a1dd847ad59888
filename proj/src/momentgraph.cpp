#include "gkmchar/momentgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmchar {

std::size_t MomentGraph::degree(std::size_t vertex) const {
    std::size_t d = 0;
    for (const MomentEdge& e : edges)
        if (e.a == vertex || e.b == vertex) ++d;
    return d;
}

std::optional<std::size_t> MomentGraph::vertex_index(const WeylElement& w) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const IntMat rel = vertices[i].matrix.inverse_unimodular() * w.matrix;
        for (const WeylElement& h : pair.weyl_h)
            if (h.matrix == rel) return i;
    }
    return std::nullopt;
}

std::vector<std::size_t> MomentGraph::edge_labels_at(std::size_t vertex) const {
    std::vector<std::size_t> labels;
    for (const MomentEdge& e : edges)
        if (e.a == vertex || e.b == vertex) labels.push_back(e.label);
    std::sort(labels.begin(), labels.end());
    return labels;
}

MomentGraph build_moment_graph(const EqualRankPair& p) {
    MomentGraph g;
    g.pair = p;
    g.vertices = coset_representatives(p);
    const RootSystem& rs = p.ambient;

    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
        const WeylElement winv = g.vertices[vi].inverse();
        for (std::size_t ai = 0; ai < rs.positive.size(); ++ai) {
            const auto hit = rs.find_root(winv.apply(rs.positive[ai].weight));
            if (!hit) throw std::logic_error("build_moment_graph: Weyl image not a root");
            if (hit->second > 0) continue;          // w^{-1}(alpha) must be negative
            if (p.is_h_root(hit->first)) continue;  // ... and not a root of H
            const WeylElement partner = rs.element_from_matrix(
                reflection_matrix(rs, ai) * g.vertices[vi].matrix);
            const auto pv = g.vertex_index(partner);
            if (!pv) throw std::logic_error("build_moment_graph: partner coset not found");
            MomentEdge e;
            e.a = std::min(vi, *pv);
            e.b = std::max(vi, *pv);
            e.label = ai;
            e.flow_source = vi;
            g.edges.push_back(e);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const MomentEdge& x, const MomentEdge& y) {
        return std::tie(x.a, x.b, x.label) < std::tie(y.a, y.b, y.label);
    });
    for (std::size_t i = 1; i < g.edges.size(); ++i)
        if (g.edges[i].a == g.edges[i - 1].a && g.edges[i].b == g.edges[i - 1].b &&
            g.edges[i].label == g.edges[i - 1].label)
            throw std::logic_error("build_moment_graph: duplicate edge");
    // Regularity: every fixed point sees one orbit per tangent weight.
    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi)
        if (g.degree(vi) != p.flag_dimension())
            throw std::logic_error("build_moment_graph: vertex degree != dim G/H");
    return g;
}

GKMSection GKMSection::ktheory_section(std::vector<LaurentPoly> values) {
    GKMSection s;
    s.theory = Theory::ktheory;
    s.k_values = std::move(values);
    return s;
}

GKMSection GKMSection::cohomology_section(std::vector<Poly> values) {
    GKMSection s;
    s.theory = Theory::cohomology;
    s.h_values = std::move(values);
    return s;
}

GKMCheckResult check_gkm(const MomentGraph& g, const GKMSection& s, ExecMode mode) {
    const std::size_t nv = g.num_vertices();
    if (s.theory == Theory::ktheory) {
        if (s.k_values.size() != nv)
            throw std::invalid_argument("check_gkm: section has wrong number of vertices");
    } else if (s.theory == Theory::cohomology) {
        if (s.h_values.size() != nv)
            throw std::invalid_argument("check_gkm: section has wrong number of vertices");
    } else {
        throw std::invalid_argument(
            "check_gkm: only cohomology and K-theory sections have an edge criterion");
    }

    std::vector<char> edge_ok(g.edges.size(), 1);
    par::for_each_index(g.edges.size(), mode, [&](std::size_t i) {
        const MomentEdge& e = g.edges[i];
        const Root& alpha = g.pair.ambient.positive[e.label];
        try {
            if (s.theory == Theory::ktheory) {
                const LaurentPoly diff = s.k_values[e.a] - s.k_values[e.b];
                if (!diff.is_zero()) (void)divide_exact_binomial(diff, alpha.weight);
            } else {
                const Poly diff = s.h_values[e.a] - s.h_values[e.b];
                if (!diff.is_zero())
                    (void)poly_divide_exact_linear(diff, Poly::linear_form(alpha.weight));
            }
        } catch (const NotDivisibleError&) {
            edge_ok[i] = 0;
        }
    });
    GKMCheckResult r;
    for (std::size_t i = 0; i < edge_ok.size(); ++i)
        if (!edge_ok[i]) {
            r.ok = false;
            r.failing_edge = i;
            break;
        }
    return r;
}

namespace {

std::vector<WeylElement> sub_reflections(const EqualRankPair& p) {
    std::vector<WeylElement> gens;
    gens.reserve(p.sub_simple.size());
    for (std::size_t idx : p.sub_simple)
        gens.push_back(p.ambient.element_from_matrix(reflection_matrix(p.ambient, idx)));
    return gens;
}

}  // namespace

GKMSection restrict_character(const MomentGraph& g, const LaurentPoly& chi) {
    for (const WeylElement& h : sub_reflections(g.pair))
        if (!(weyl_act(h, chi) == chi))
            throw std::invalid_argument("restrict_character: character is not W_H-invariant");
    std::vector<LaurentPoly> values;
    values.reserve(g.num_vertices());
    for (const WeylElement& w : g.vertices) values.push_back(weyl_act(w, chi));
    return GKMSection::ktheory_section(std::move(values));
}

GKMSection restrict_polynomial(const MomentGraph& g, const Poly& f) {
    for (const WeylElement& h : sub_reflections(g.pair))
        if (!(weyl_act(h, f) == f))
            throw std::invalid_argument("restrict_polynomial: polynomial is not W_H-invariant");
    std::vector<Poly> values;
    values.reserve(g.num_vertices());
    for (const WeylElement& w : g.vertices) values.push_back(weyl_act(w, f));
    return GKMSection::cohomology_section(std::move(values));
}

}  // namespace gkmchar
