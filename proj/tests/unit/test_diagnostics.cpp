#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopf/flow.hpp"

using namespace hopf;

namespace {

constexpr double kPi = 3.14159265358979323846;

FlowState zero_state(const HopfModuli& m, int n) {
    const GridSpec grid{n, n, m.period_L};
    return FlowState{m, grid, 0.0, std::vector<double>(grid.size(), 0.0)};
}

}  // namespace

TEST_CASE("total_volume closed forms at t = 0") {
    // round: Vol = 2 pi^2 L
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const FlowState s = zero_state(sym, 64);
    CHECK(total_volume(s) ==
          doctest::Approx(2.0 * kPi * kPi * sym.period_L).epsilon(1e-6));

    // asymmetric: Vol = pi^2 L / (2 k1 k2)
    const HopfModuli m = make_moduli(2.0, 4.0);
    const FlowState sa = zero_state(m, 64);
    const double expected = kPi * kPi * m.period_L / (2.0 * m.k1 * m.k2);
    CHECK(expected == doctest::Approx(46.17734713103554).epsilon(1e-12));
    CHECK(total_volume(sa) == doctest::Approx(expected).epsilon(1e-3));

    // quadrature refinement converges to the closed form
    const double e64 = std::abs(total_volume(zero_state(m, 64)) - expected);
    const double e128 = std::abs(total_volume(zero_state(m, 128)) - expected);
    CHECK(e128 < e64);
}

TEST_CASE("trace_field_max at t = 0") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    CHECK(trace_field_max(zero_state(sym, 16)) ==
          doctest::Approx(2.0).epsilon(1e-12));

    const HopfModuli m = make_moduli(2.0, 4.0);
    const FlowState s = zero_state(m, 16);
    const FlowGeometry geo = FlowGeometry::build(m, s.grid);
    double expected = 0.0;
    for (int i = 0; i < s.grid.n_u; ++i)
        for (int j = 0; j < s.grid.n_sigma; ++j) {
            const AmbientPoint p = ambient_from_reduced(
                m, {s.grid.u_node(i), s.grid.sigma_center(j)});
            expected = std::max(expected,
                                trace_pair(chi_metric(m, p), hat_metric(m, p)));
        }
    CHECK(trace_field_max(geo, s) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("q_functional_max at t = 0 is trace plus A") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    CHECK(q_functional_max(zero_state(sym, 16), 10.0, 10.0) ==
          doctest::Approx(12.0).epsilon(1e-12));
    CHECK_THROWS_AS(q_functional_max(zero_state(sym, 16), -1.0, 10.0),
                    std::invalid_argument);
}

TEST_CASE("lemma31_monitors reduce to the exact solution on the round surface") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const GridSpec grid{16, 16, sym.period_L};
    FlowControl control;
    control.t_max = 0.4;
    const FlowResult r = run_flow(sym, grid, {}, control);
    // log Z = 0, so psi = phi and psidot = phidot = log(1 - 2t)
    const auto [max_psi, max_psidot] = lemma31_monitors(r.final_state);
    CHECK(max_psi ==
          doctest::Approx(std::abs(exact_round_potential(0.4))).epsilon(1e-6));
    CHECK(max_psidot == doctest::Approx(std::log(1.0 - 0.8)).epsilon(1e-5));

    // at t = 0, psidot vanishes identically for zero data
    const auto [psi0, psidot0] = lemma31_monitors(zero_state(sym, 16));
    CHECK(psi0 == 0.0);
    CHECK(std::abs(psidot0) < 1e-11);
    const HopfModuli m = make_moduli(2.0, 4.0);
    const auto [psi0a, psidot0a] = lemma31_monitors(zero_state(m, 16));
    CHECK(psi0a == 0.0);
    CHECK(std::abs(psidot0a) < 1e-10);
}

TEST_CASE("loop_lengths on the round surface are t-independent at L/sqrt(2)") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const double expected = sym.period_L / std::sqrt(2.0);

    const auto [lo0, hi0] = loop_lengths(zero_state(sym, 16));
    CHECK(lo0 == doctest::Approx(expected).epsilon(1e-12));
    CHECK(hi0 == doctest::Approx(expected).epsilon(1e-12));

    const GridSpec grid{16, 16, sym.period_L};
    FlowControl control;
    control.t_max = 0.45;
    const FlowResult r = run_flow(sym, grid, {}, control);
    const auto [lo, hi] = loop_lengths(r.final_state);
    CHECK(lo == doctest::Approx(expected).epsilon(1e-8));
    CHECK(hi == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("c1_norm vanishing gradient for constant-in-space runs") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    FlowState s = zero_state(sym, 16);
    CHECK(c1_norm(s) == 0.0);
    for (double& v : s.phi) v = -0.3;
    CHECK(c1_norm(s) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("compute_record is consistent with the individual monitors") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    InitialData bump;
    bump.family = InitialData::Family::cos_bump;
    bump.epsilon = 0.05;
    FlowState s{m, grid, 0.0, make_initial_potential(m, grid, bump)};

    const double vol0 = total_volume(geo, s);
    const MonitorRecord r = compute_record(geo, s, 10.0, 10.0, vol0);
    CHECK(r.volume == doctest::Approx(vol0).epsilon(1e-14));
    CHECK(r.volume_predicted == doctest::Approx(vol0).epsilon(1e-14));
    CHECK(r.max_trace_chi_omega ==
          doctest::Approx(trace_field_max(geo, s)).epsilon(1e-13));
    CHECK(r.q_max ==
          doctest::Approx(q_functional_max(geo, s, 10.0, 10.0)).epsilon(1e-13));
    const auto [psi, psidot] = lemma31_monitors(geo, s);
    CHECK(r.max_abs_psi == doctest::Approx(psi).epsilon(1e-13));
    CHECK(r.max_psi_dot == doctest::Approx(psidot).epsilon(1e-13));
    const auto [lo, hi] = loop_lengths(geo, s);
    CHECK(r.loop_length_min == doctest::Approx(lo).epsilon(1e-13));
    CHECK(r.loop_length_max == doctest::Approx(hi).epsilon(1e-13));
    CHECK(r.c1_norm_phi == doctest::Approx(c1_norm(geo, s)).epsilon(1e-13));
    CHECK(r.min_metric_eigenvalue > 0.0);
}
