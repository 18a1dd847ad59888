// Command-line front end: root data, moment graphs, localization
// push-forwards, and character series with deterministic output.
//
// Exit codes: 0 success, 1 verification failure (witness printed),
// 2 usage error.

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkmchar/charformulas.hpp"
#include "gkmchar/json_io.hpp"
#include "gkmchar/localize.hpp"
#include "poly_parse.hpp"

namespace {

using namespace gkmchar;

CartanType make_cartan_type(std::string type, int rank) {
    if (type.empty()) throw std::invalid_argument("--type is required");
    if (type.find_first_of("0123456789") == std::string::npos) {
        if (rank <= 0)
            throw std::invalid_argument("--type " + type + " needs --rank");
        type += std::to_string(rank);
    } else if (rank > 0) {
        throw std::invalid_argument("give the rank either inside --type or via --rank, not both");
    }
    return CartanType::parse(type);
}

// Fundamental coordinates "1,0,2" when the weight is integral, else the
// raw half-coordinate form.
std::string weight_string(const Weight& w) {
    if (!w.is_integral()) return w.to_string();
    std::string out;
    for (int i = 0; i < w.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.coords[static_cast<std::size_t>(i)] / 2);
    }
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer list entry: " + item);
        out.push_back(v);
    }
    return out;
}

Weight parse_weight_arg(const std::string& s, int rank) {
    const auto v = parse_int_list(s);
    if (static_cast<int>(v.size()) != rank)
        throw std::invalid_argument("--weight needs " + std::to_string(rank) +
                                    " comma-separated fundamental coordinates");
    return Weight::from_fundamental(v);
}

EqualRankPair parse_subgroup(const RootSystem& rs, const std::string& sub) {
    const auto list = parse_int_list(sub);
    std::vector<int> idx;
    idx.reserve(list.size());
    for (std::int64_t v : list) {
        if (v < 1 || v > rs.rank())
            throw std::invalid_argument("--sub entries are 1-based simple-root indices");
        idx.push_back(static_cast<int>(v - 1));
    }
    return EqualRankPair::from_simple_indices(rs, idx);
}

// The full W-orbit sum of z^lambda; W_H-invariant for every H.
LaurentPoly orbit_character(const RootSystem& rs, const Weight& lambda) {
    std::set<Weight> orbit;
    for (const WeylElement& w : weyl_group(rs)) orbit.insert(w.apply(lambda));
    LaurentPoly chi = LaurentPoly::zero(rs.rank());
    for (const Weight& m : orbit) chi.add_term(m, Rat(1));
    return chi;
}

// Orbit sum of d-th powers of the weights' linear forms.
Poly orbit_polynomial(const RootSystem& rs, const Weight& lambda, int d) {
    std::set<Weight> orbit;
    for (const WeylElement& w : weyl_group(rs)) orbit.insert(w.apply(lambda));
    Poly acc = Poly::zero(rs.rank());
    for (const Weight& m : orbit) {
        Poly p = Poly::constant(rs.rank(), Rat(1));
        const Poly l = Poly::linear_form(m);
        for (int i = 0; i < d; ++i) p = p * l;
        acc = acc + p;
    }
    return acc;
}

// Dominant weights with coordinate sum <= bound, in lexicographic order.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, std::int64_t bound) {
    std::vector<Weight> out;
    std::vector<std::int64_t> a(static_cast<std::size_t>(rs.rank()), 0);
    for (;;) {
        std::int64_t sum = 0;
        for (std::int64_t c : a) sum += c;
        if (sum <= bound) out.push_back(Weight::from_fundamental(a));
        int i = rs.rank() - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] + 1 > bound) {
            a[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++a[static_cast<std::size_t>(i)];
    }
    return out;
}

struct VerifyReport {
    std::string text;
    bool ok = true;

    void line(const std::string& s) { text += s + "\n"; }
    void fail(const std::string& witness) {
        ok = false;
        line("FAIL: " + witness);
    }
};

VerifyReport verify_denominator(const RootSystem& rs) {
    VerifyReport r;
    const LaurentPoly lhs = weyl_denominator_sum(rs);
    const LaurentPoly rhs = weyl_denominator_product(rs);
    r.line("denominator identity on " + rs.type.to_string() + ": " +
           std::to_string(lhs.num_terms()) + " signed orbit terms vs product of " +
           std::to_string(rs.num_positive_roots()) + " factors");
    if (lhs == rhs)
        r.line("PASS");
    else
        r.fail("sum - product = " + (lhs - rhs).to_string());
    return r;
}

VerifyReport verify_gkm(const RootSystem& rs, const EqualRankPair& p) {
    VerifyReport r;
    const MomentGraph g = build_moment_graph(p);
    r.line("moment graph on " + rs.type.to_string() + ": " + std::to_string(g.num_vertices()) +
           " vertices, " + std::to_string(g.num_edges()) + " edges");
    int sections = 0;
    for (const Weight& lam : dominant_weights_up_to(rs, 3)) {
        const GKMSection ks = restrict_character(g, orbit_character(rs, lam));
        const GKMCheckResult kr = check_gkm(g, ks);
        if (!kr.ok) {
            r.fail("K-theory orbit section " + weight_string(lam) + " fails at edge " +
                   std::to_string(*kr.failing_edge));
            return r;
        }
        ++sections;
        for (int d = 1; d <= 3; ++d) {
            const GKMSection hs = restrict_polynomial(g, orbit_polynomial(rs, lam, d));
            const GKMCheckResult hr = check_gkm(g, hs);
            if (!hr.ok) {
                r.fail("cohomology orbit section " + weight_string(lam) + " deg " +
                       std::to_string(d) + " fails at edge " + std::to_string(*hr.failing_edge));
                return r;
            }
            ++sections;
        }
    }
    r.line(std::to_string(sections) + " restricted sections pass the edge criterion");
    r.line("PASS");
    return r;
}

VerifyReport verify_theta(const RootSystem& rs, std::int64_t level, std::int64_t order) {
    VerifyReport r;
    const LevelForm form = looijenga_form(rs);
    const auto reps = theta_representatives(form, level);
    const auto W = weyl_group(rs);
    r.line("theta basis on " + rs.type.to_string() + " at level " + std::to_string(level) + ": " +
           std::to_string(reps.size()) + " representatives, order " + std::to_string(order));
    for (const Weight& lam : reps) {
        const QSeries th = theta_series({level, lam}, form, order);
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(rs.rank()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            if (!quasi_periodicity_check(th, level, CorootVector(e), form)) {
                r.fail("quasi-periodicity fails for lambda " + weight_string(lam) +
                       " along coroot " + std::to_string(i + 1));
                return r;
            }
        }
        for (const WeylElement& w : W) {
            const QSeries moved = theta_series({level, w.apply(lam)}, form, order);
            if (!moved.equals_through_common_order(weyl_act(w, th))) {
                r.fail("Weyl equivariance fails for lambda " + weight_string(lam) + " at " +
                       rs.word_string(w));
                return r;
            }
        }
    }
    r.line("quasi-periodicity and Weyl equivariance hold for all representatives");
    r.line("PASS");
    return r;
}

VerifyReport verify_kac(const RootSystem& rs, std::int64_t k, std::int64_t order) {
    VerifyReport r;
    const EqualRankPair p = EqualRankPair::make(rs, {});
    const LevelForm form = looijenga_form(rs);
    const std::int64_t shifted = k + form.dual_coxeter;
    const auto reps = theta_representatives(form, shifted);
    r.line("induction on " + rs.type.to_string() + " at level " + std::to_string(k) +
           " (theta level " + std::to_string(shifted) + "): " + std::to_string(reps.size()) +
           " basis elements, order " + std::to_string(order));
    for (const Weight& lam : reps) {
        const KacCharacter kc = kac_basis_ind(p, k, lam, form, order);
        const auto mu = kc.series.min_nonzero_order();
        if (!mu) {
            r.line("  lambda " + weight_string(lam) + ": induces 0");
            continue;
        }
        r.line("  lambda " + weight_string(lam) + ": divides exactly, orders " +
               std::to_string(*mu) + ".." + std::to_string(kc.series.truncation_order()));
        // Leading coefficient = the classical induced character of the
        // theta's leading z-data, shifted by z^{-rho}.
        const QSeries th = theta_series({shifted, lam}, form, order);
        const LaurentPoly classical =
            weyl_ind(p, th.coeff(*mu).shifted(-rs.rho));
        if (!(kc.series.coeff(*mu) == classical)) {
            r.fail("classical limit mismatch for lambda " + weight_string(lam));
            return r;
        }
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(rs.rank()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            if (!quasi_periodicity_check(kc.series, k, CorootVector(e), form)) {
                r.fail("level-" + std::to_string(k) + " quasi-periodicity fails for lambda " +
                       weight_string(lam));
                return r;
            }
        }
    }
    r.line("classical limits and level-" + std::to_string(k) + " quasi-periodicity hold");
    r.line("PASS");
    return r;
}

void emit(const std::string& s) {
    std::fwrite(s.data(), 1, s.size(), stdout);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moment graphs, localization push-forwards, and character formulas"};
    app.require_subcommand(1);

    std::string type, sub, weight_arg, poly_arg, format, theory = "K", suite;
    int rank = 0;
    std::int64_t level = 0, order = 10;

    auto add_type = [&](CLI::App* c) {
        c->add_option("--type", type, "Cartan type, e.g. A2 (or a bare letter plus --rank)")
            ->required();
        c->add_option("--rank", rank, "rank when --type is a bare letter");
    };

    CLI::App* c_root = app.add_subcommand("rootdata", "print root data as JSON");
    add_type(c_root);

    CLI::App* c_graph = app.add_subcommand("moment-graph", "print the moment graph of G/H");
    add_type(c_graph);
    c_graph->add_option("--sub", sub, "1-based simple-root indices generating H (comma list)");
    c_graph->add_option("--format", format, "json | dot | both (default both)");

    CLI::App* c_weyl = app.add_subcommand("weyl", "induced character of z^weight");
    add_type(c_weyl);
    c_weyl->add_option("--sub", sub, "1-based simple-root indices generating H");
    c_weyl->add_option("--weight", weight_arg, "fundamental-weight coordinates")->required();
    c_weyl->add_option("--format", format, "text | json (default text)");

    CLI::App* c_cohom = app.add_subcommand("cohom", "cohomological push-forward of a polynomial");
    add_type(c_cohom);
    c_cohom->add_option("--sub", sub, "1-based simple-root indices generating H");
    c_cohom->add_option("--poly", poly_arg, "polynomial in x / x1..xr")->required();
    c_cohom->add_option("--format", format, "text | json (default text)");

    CLI::App* c_kac = app.add_subcommand("kac", "level-k character series via theta induction");
    add_type(c_kac);
    c_kac->add_option("--level", level, "target level k")->required();
    c_kac->add_option("--weight", weight_arg, "fundamental coordinates of the theta index")
        ->required();
    c_kac->add_option("--order", order, "q-truncation order (default 10)");
    c_kac->add_option("--format", format, "json | text (default json)");

    CLI::App* c_push = app.add_subcommand("pushforward", "localization push-forward over G/H");
    add_type(c_push);
    c_push->add_option("--sub", sub, "1-based simple-root indices generating H");
    c_push->add_option("--weight", weight_arg, "fundamental coordinates")->required();
    c_push->add_option("--theory", theory, "K | H (default K)");

    CLI::App* c_verify = app.add_subcommand("verify", "run an identity suite; exit 1 on failure");
    c_verify->add_option("suite", suite, "denominator | gkm | theta | kac")->required();
    add_type(c_verify);
    c_verify->add_option("--sub", sub, "1-based simple-root indices generating H (gkm)");
    c_verify->add_option("--level", level, "level (theta: theta level; kac: target level)");
    c_verify->add_option("--order", order, "q-truncation order (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const RootSystem rs = build_root_system(make_cartan_type(type, rank));

        if (c_root->parsed()) {
            emit(root_system_to_json(rs) + "\n");
            return 0;
        }

        if (c_graph->parsed()) {
            const MomentGraph g = build_moment_graph(parse_subgroup(rs, sub));
            std::string out;
            const std::string fmt = format.empty() ? "both" : format;
            if (fmt == "json" || fmt == "both") out += moment_graph_to_json(g, rs) + "\n";
            if (fmt == "dot" || fmt == "both") out += moment_graph_to_dot(g, rs);
            if (fmt != "json" && fmt != "dot" && fmt != "both")
                throw std::invalid_argument("--format must be json, dot, or both");
            emit(out);
            return 0;
        }

        if (c_weyl->parsed()) {
            const EqualRankPair p = parse_subgroup(rs, sub);
            const LaurentPoly chi =
                LaurentPoly::monomial(parse_weight_arg(weight_arg, rs.rank()));
            const LaurentPoly out = weyl_ind(p, chi);
            if (format == "json")
                emit(laurent_to_json(out) + "\n");
            else if (format.empty() || format == "text")
                emit(out.to_string() + "\n");
            else
                throw std::invalid_argument("--format must be text or json");
            return 0;
        }

        if (c_cohom->parsed()) {
            const EqualRankPair p = parse_subgroup(rs, sub);
            const Poly f = cli::parse_poly(poly_arg, rs.rank());
            const Poly out = cohomology_pushforward(p, f);
            if (format == "json")
                emit(poly_to_json(out) + "\n");
            else if (format.empty() || format == "text")
                emit(out.to_string() + "\n");
            else
                throw std::invalid_argument("--format must be text or json");
            return 0;
        }

        if (c_kac->parsed()) {
            const EqualRankPair p = EqualRankPair::make(rs, {});
            const LevelForm form = looijenga_form(rs);
            const KacCharacter kc = kac_basis_ind(
                p, level, parse_weight_arg(weight_arg, rs.rank()), form, order);
            if (format.empty() || format == "json")
                emit(qseries_to_json(kc.series) + "\n");
            else if (format == "text")
                emit(kc.series.to_string() + "\n");
            else
                throw std::invalid_argument("--format must be json or text");
            return 0;
        }

        if (c_push->parsed()) {
            const EqualRankPair p = parse_subgroup(rs, sub);
            const MomentGraph g = build_moment_graph(p);
            const Weight lam = parse_weight_arg(weight_arg, rs.rank());
            std::string out;
            if (theory == "K" || theory == "ktheory") {
                const LaurentPoly chi = LaurentPoly::monomial(lam);
                const LaurentPoly res = pushforward_k(g, restrict_character(g, chi),
                                                      euler_data(g, Theory::ktheory));
                out = laurent_to_json(res) + "\n" + res.to_string() + "\n";
            } else if (theory == "H" || theory == "cohomology") {
                const Poly f = Poly::linear_form(lam);
                const Poly res = pushforward_h(g, restrict_polynomial(g, f),
                                               euler_data(g, Theory::cohomology));
                out = poly_to_json(res) + "\n" + res.to_string() + "\n";
            } else {
                throw std::invalid_argument("--theory must be K or H");
            }
            emit(out);
            return 0;
        }

        if (c_verify->parsed()) {
            VerifyReport r;
            if (suite == "denominator") {
                r = verify_denominator(rs);
            } else if (suite == "gkm") {
                r = verify_gkm(rs, parse_subgroup(rs, sub));
            } else if (suite == "theta") {
                if (level < 1) throw std::invalid_argument("verify theta needs --level >= 1");
                r = verify_theta(rs, level, order);
            } else if (suite == "kac") {
                if (level < 0) throw std::invalid_argument("verify kac needs --level >= 0");
                r = verify_kac(rs, level, order);
            } else {
                throw std::invalid_argument("unknown suite: " + suite);
            }
            emit(r.text);
            return r.ok ? 0 : 1;
        }
    } catch (const InvalidSectionError& e) {
        std::cerr << "verification failure: " << e.what() << " (edge " << e.failing_edge
                  << ")\n";
        return 1;
    } catch (const NotDivisibleError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const EmptyWindowError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
