#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopf/flow.hpp"

using namespace hopf;

TEST_CASE("exact_round_potential") {
    CHECK(exact_round_potential(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(exact_round_potential(0.25) ==
          doctest::Approx(-0.07671320486001367).epsilon(1e-14));
    // limit toward the extinction time
    CHECK(exact_round_potential(0.4999999) == doctest::Approx(-0.5).epsilon(1e-5));
    CHECK_THROWS_AS(exact_round_potential(0.5), std::invalid_argument);

    // confirm by quadrature of phidot = log(1 - 2s) (Simpson)
    const double t = 0.31;
    const int n = 2000;
    double acc = 0.0;
    const double h = t / n;
    for (int i = 0; i < n; ++i) {
        const double a = i * h, b = a + h, mid = a + 0.5 * h;
        acc += h / 6.0 *
               (std::log(1 - 2 * a) + 4.0 * std::log(1 - 2 * mid) +
                std::log(1 - 2 * b));
    }
    CHECK(exact_round_potential(t) == doctest::Approx(acc).epsilon(1e-10));
}

TEST_CASE("make_initial_potential families and admissibility") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};

    const std::vector<double> zero = make_initial_potential(m, grid, {});
    for (double v : zero) CHECK(v == 0.0);

    InitialData bump;
    bump.family = InitialData::Family::cos_bump;
    bump.epsilon = 0.01;
    const std::vector<double> psi = make_initial_potential(m, grid, bump);
    CHECK(psi[grid.index(0, 8)] != 0.0);

    bump.epsilon = 1e3;
    CHECK_THROWS_AS(make_initial_potential(m, grid, bump), AdmissibilityError);
}

TEST_CASE("flow_rhs closed cases") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    FlowState s{m, grid, 0.0, std::vector<double>(grid.size(), 0.0)};

    // at t = 0 with phi = 0 the rhs is -3 log Z
    const std::vector<double> rhs = flow_rhs(geo, s);
    for (int i = 0; i < grid.n_u; ++i)
        for (int j = 0; j < grid.n_sigma; ++j) {
            const double z = z_of_sigma(m, grid.sigma_center(j));
            CHECK(rhs[grid.index(i, j)] ==
                  doctest::Approx(-3.0 * std::log(z)).epsilon(1e-11));
        }

    // on the round surface the rhs is log(1 - 2t) for spatially constant phi
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const GridSpec sgrid{16, 16, sym.period_L};
    const FlowGeometry sgeo = FlowGeometry::build(sym, sgrid);
    for (double t : {0.0, 0.2, 0.45}) {
        FlowState rs{sym, sgrid, t, std::vector<double>(sgrid.size(), 0.3)};
        const std::vector<double> rr = flow_rhs(sgeo, rs);
        for (double v : rr)
            CHECK(v == doctest::Approx(std::log(1.0 - 2.0 * t)).epsilon(1e-10));
    }
}

TEST_CASE("step_rk4 keeps round data spatially constant") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const GridSpec grid{16, 16, sym.period_L};
    const FlowGeometry geo = FlowGeometry::build(sym, grid);
    FlowState s{sym, grid, 0.0, std::vector<double>(grid.size(), 0.0)};
    s = step_rk4(geo, s, 1e-3);
    double lo = 1e300, hi = -1e300;
    for (double v : s.phi) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-13);
    CHECK(hi == doctest::Approx(exact_round_potential(1e-3)).epsilon(1e-12));
}

TEST_CASE("step_rk4 temporal order measured on the round exact solution") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const GridSpec grid{8, 8, sym.period_L};
    const FlowGeometry geo = FlowGeometry::build(sym, grid);

    const auto integrate = [&](double dt) {
        FlowState s{sym, grid, 0.0, std::vector<double>(grid.size(), 0.0)};
        const double t_end = 0.4;
        const int steps = static_cast<int>(std::round(t_end / dt));
        for (int k = 0; k < steps; ++k) s = step_rk4(geo, s, dt);
        return std::abs(s.phi[0] - exact_round_potential(s.t));
    };
    const double e1 = integrate(0.01);
    const double e2 = integrate(0.005);
    CHECK(e1 < 1e-8);
    CHECK(std::log2(e1 / e2) > 3.8);  // classical 4th order
}

TEST_CASE("step_rk4 rejects bad dt and reports positivity failure") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    const FlowState s{m, grid, 0.0, std::vector<double>(grid.size(), 0.0)};
    CHECK_THROWS_AS(step_rk4(geo, s, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(step_rk4(geo, s, 0.6), std::invalid_argument);
    // a huge explicit step destroys positivity at some stage
    CHECK_THROWS_AS(step_rk4(geo, s, 0.4), PositivityError);
}

TEST_CASE("assemble_evolving_metric matches the reference family for constant phi") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    FlowState s{m, grid, 0.4, std::vector<double>(grid.size(), 1.23)};
    for (int i : {0, 5, 15})
        for (int j : {0, 7, 15}) {
            const AmbientPoint p = ambient_from_reduced(
                m, {grid.u_node(i), grid.sigma_center(j)});
            const Hermitian2 expected = reference_metric(m, 0.4, p);
            const Hermitian2 got = assemble_evolving_metric(geo, s, i, j);
            CHECK((got - expected).frobenius() < 1e-12 * expected.frobenius());
            CHECK(got.det() ==
                  doctest::Approx(0.2 * hat_metric(m, p).det()).epsilon(1e-10));
        }
}

TEST_CASE("run_flow on the round surface reproduces the exact solution") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const GridSpec grid{16, 16, sym.period_L};
    FlowControl control;
    control.t_max = 0.3;
    control.monitor_cadence = 0.05;
    const FlowResult r = run_flow(sym, grid, {}, control);
    CHECK(r.termination == "completed");
    CHECK(r.final_state.t == doctest::Approx(0.3).epsilon(1e-14));
    double spatial_lo = 1e300, spatial_hi = -1e300;
    for (double v : r.final_state.phi) {
        spatial_lo = std::min(spatial_lo, v);
        spatial_hi = std::max(spatial_hi, v);
    }
    CHECK(spatial_hi - spatial_lo < 1e-10);
    CHECK(r.final_state.phi[0] ==
          doctest::Approx(exact_round_potential(0.3)).epsilon(1e-8));
    // records at 0, 0.05, ..., 0.3
    CHECK(r.trajectory.size() == 7);
    CHECK(r.trajectory.back().t == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("run_flow is invariant under thread count") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    FlowControl c1;
    c1.t_max = 0.2;
    c1.threads = 1;
    FlowControl c2 = c1;
    c2.threads = 2;
    const FlowResult r1 = run_flow(m, grid, {}, c1);
    const FlowResult r2 = run_flow(m, grid, {}, c2);
    REQUIRE(r1.final_state.phi.size() == r2.final_state.phi.size());
    for (std::size_t p = 0; p < r1.final_state.phi.size(); ++p)
        CHECK(r1.final_state.phi[p] == r2.final_state.phi[p]);
    REQUIRE(r1.trajectory.size() == r2.trajectory.size());
    for (std::size_t k = 0; k < r1.trajectory.size(); ++k) {
        CHECK(r1.trajectory[k].volume == r2.trajectory[k].volume);
        CHECK(r1.trajectory[k].q_max == r2.trajectory[k].q_max);
    }
}

TEST_CASE("run_flow rejects inadmissible initial data") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    InitialData bad;
    bad.family = InitialData::Family::cos_bump;
    bad.epsilon = 1e3;
    CHECK_THROWS_AS(run_flow(m, grid, bad, {}), AdmissibilityError);
}
