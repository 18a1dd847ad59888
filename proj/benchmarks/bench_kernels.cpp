// Side-by-side timings of every parallel kernel against its serial
// reference path.  Run with --benchmark_filter=... to narrow.
#include <benchmark/benchmark.h>

#include <set>

#include "gkmchar/charformulas.hpp"

using namespace gkmchar;

namespace {

LaurentPoly orbit_character(const RootSystem& rs, const Weight& lam) {
    std::set<Weight> orbit;
    for (const WeylElement& w : weyl_group(rs)) orbit.insert(w.apply(lam));
    LaurentPoly chi(rs.rank());
    for (const Weight& m : orbit) chi.add_term(m, Rat(1));
    return chi;
}

void bm_gkm_check(benchmark::State& state, ExecMode mode) {
    const RootSystem rs = build_root_system(CartanType::parse("G2"));
    const MomentGraph g = build_moment_graph(EqualRankPair::from_simple_indices(rs, {}));
    const GKMSection s = restrict_character(g, orbit_character(rs, rs.rho + rs.rho));
    for (auto _ : state) benchmark::DoNotOptimize(check_gkm(g, s, mode).ok);
}

void bm_pushforward(benchmark::State& state, ExecMode mode) {
    const RootSystem rs = build_root_system(CartanType::parse("G2"));
    const MomentGraph g = build_moment_graph(EqualRankPair::from_simple_indices(rs, {}));
    const GKMSection s = restrict_character(g, orbit_character(rs, rs.rho));
    const EulerData e = euler_data(g, Theory::ktheory);
    for (auto _ : state) {
        LaurentPoly r = pushforward_k(g, s, e, /*validate=*/false, mode);
        benchmark::DoNotOptimize(r);
    }
}

void bm_theta(benchmark::State& state, ExecMode mode) {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    const LevelForm form = looijenga_form(rs);
    for (auto _ : state) {
        QSeries t = theta_series({3, rs.rho}, form, 12, mode);
        benchmark::DoNotOptimize(t);
    }
}

void bm_elliptic_euler(benchmark::State& state, ExecMode mode) {
    const RootSystem rs = build_root_system(CartanType::parse("G2"));
    const EqualRankPair p = EqualRankPair::from_simple_indices(rs, {});
    const std::vector<Weight> tangent = p.tangent_weights();
    for (auto _ : state) {
        QSeries t = elliptic_euler(rs.rank(), tangent, 10, mode);
        benchmark::DoNotOptimize(t);
    }
}

void bm_graded_induction(benchmark::State& state, ExecMode mode) {
    const RootSystem rs = build_root_system(CartanType::parse("A1"));
    const EqualRankPair p = EqualRankPair::from_simple_indices(rs, {});
    const LevelForm form = looijenga_form(rs);
    for (auto _ : state) {
        KacCharacter k = kac_basis_ind(p, 2, rs.rho, form, 16, mode);
        benchmark::DoNotOptimize(k.series);
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_gkm_check, serial, ExecMode::serial);
BENCHMARK_CAPTURE(bm_gkm_check, openmp, ExecMode::openmp);
BENCHMARK_CAPTURE(bm_pushforward, serial, ExecMode::serial);
BENCHMARK_CAPTURE(bm_pushforward, openmp, ExecMode::openmp);
BENCHMARK_CAPTURE(bm_theta, serial, ExecMode::serial);
BENCHMARK_CAPTURE(bm_theta, openmp, ExecMode::openmp);
BENCHMARK_CAPTURE(bm_elliptic_euler, serial, ExecMode::serial);
BENCHMARK_CAPTURE(bm_elliptic_euler, openmp, ExecMode::openmp);
BENCHMARK_CAPTURE(bm_graded_induction, serial, ExecMode::serial);
BENCHMARK_CAPTURE(bm_graded_induction, openmp, ExecMode::openmp);

BENCHMARK_MAIN();
