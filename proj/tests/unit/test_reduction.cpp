#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopf/fd.hpp"
#include "hopf/reduction.hpp"

using namespace hopf;

namespace {

// FD oracle of the true inverse chart x -> (u(x), sigma(x)): the forward map
// is evaluated by solving the defining relation from scratch.
ReducedCoord chart_at(const HopfModuli& m, double x1, double x2) {
    return reduced_from_ambient(m, {std::exp(x1), std::exp(x2)});
}

}  // namespace

TEST_CASE("chart_jacobians closed cases") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const ChartJacobians j = chart_jacobians(sym, {0.3, 0.5});
    CHECK(j.du_dx[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(j.du_dx[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(j.dsigma_dx[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(j.dsigma_dx[1] == doctest::Approx(-0.5).epsilon(1e-14));

    const HopfModuli m = make_moduli(2.0, 4.0);
    const double sigma = 0.6180339887498949;
    const ChartJacobians ja = chart_jacobians(m, {0.0, sigma});
    CHECK(ja.du_dx[0] ==
          doctest::Approx(2.0 * sigma / 0.9213106741667368).epsilon(1e-13));

    CHECK_THROWS_AS(chart_jacobians(m, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(chart_jacobians(m, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("chart_jacobians degenerate ends vanish like sigma(1-sigma)") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    for (double s : {1e-4, 1e-6}) {
        const ChartJacobians j = chart_jacobians(m, {0.0, s});
        CHECK(std::abs(j.dsigma_dx[0]) < 5.0 * s);
        CHECK(std::abs(j.dsigma_dx[1]) < 5.0 * s);
    }
}

TEST_CASE("chart_jacobians cross-validated against FD of the inverse chart") {
    for (auto [a, b] : {std::pair{2.0, 4.0}, {1.5, 3.0}, {2.0, 2.0}}) {
        const HopfModuli m = make_moduli(a, b);
        const double h = 1e-5;
        for (double sigma : {0.1, 0.35, 0.5, 0.82, 0.97}) {
            for (double u : {0.0, 0.9}) {
                const ChartJacobians cj = chart_jacobians(m, {u, sigma});
                const AmbientPoint p = ambient_from_reduced(m, {u, sigma});
                const double x1 = std::log(p.z1.real());
                const double x2 = std::log(p.z2.real());

                const auto at = [&](double d1, double d2) {
                    return chart_at(m, x1 + d1, x2 + d2);
                };
                // first derivatives
                const double du1 = (at(h, 0).u - at(-h, 0).u) / (2 * h);
                const double du2 = (at(0, h).u - at(0, -h).u) / (2 * h);
                const double ds1 = (at(h, 0).sigma - at(-h, 0).sigma) / (2 * h);
                const double ds2 = (at(0, h).sigma - at(0, -h).sigma) / (2 * h);
                CHECK(cj.du_dx[0] == doctest::Approx(du1).epsilon(1e-8));
                CHECK(cj.du_dx[1] == doctest::Approx(du2).epsilon(1e-8));
                CHECK(cj.dsigma_dx[0] == doctest::Approx(ds1).epsilon(1e-8));
                CHECK(cj.dsigma_dx[1] == doctest::Approx(ds2).epsilon(1e-8));

                // second derivatives
                const double h2 = 1e-4;
                const auto second = [&](auto field, int a_, int b_) {
                    const auto f = [&](double d1, double d2) {
                        return field(at(d1, d2));
                    };
                    if (a_ == b_) {
                        const double d1 = a_ == 0 ? h2 : 0.0;
                        const double d2 = a_ == 0 ? 0.0 : h2;
                        return (f(d1, d2) - 2.0 * f(0, 0) + f(-d1, -d2)) / (h2 * h2);
                    }
                    return (f(h2, h2) - f(h2, -h2) - f(-h2, h2) + f(-h2, -h2)) /
                           (4.0 * h2 * h2);
                };
                const auto uf = [](const ReducedCoord& rc) { return rc.u; };
                const auto sf = [](const ReducedCoord& rc) { return rc.sigma; };
                const int idx[3][2] = {{0, 0}, {0, 1}, {1, 1}};
                for (int k = 0; k < 3; ++k) {
                    const double fd_u = second(uf, idx[k][0], idx[k][1]);
                    const double fd_s = second(sf, idx[k][0], idx[k][1]);
                    CHECK(cj.d2u_dx[k] == doctest::Approx(fd_u).epsilon(5e-6));
                    CHECK(std::abs(cj.d2sigma_dx[k] - fd_s) < 5e-6);
                }
            }
        }
    }
}

TEST_CASE("reduced_complex_hessian annihilates constants exactly") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    const std::vector<double> constant(grid.size(), 3.7);
    for (int i = 0; i < grid.n_u; ++i)
        for (int j = 0; j < grid.n_sigma; ++j) {
            const Hermitian2 h = reduced_complex_hessian(geo, constant, i, j);
            CHECK(h.frobenius() == 0.0);
        }
}

TEST_CASE("reduced_complex_hessian of a*u equals a*(ghat - Theta)") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const GridSpec grid{16, 16, m.period_L};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    const double a = 1.7;
    std::vector<double> f(grid.size());
    for (int i = 0; i < grid.n_u; ++i)
        for (int j = 0; j < grid.n_sigma; ++j)
            f[grid.index(i, j)] = a * grid.u_node(i) + 0.4;

    // stencils cross the periodic seam at i in {0, n-1}, where u jumps by L
    for (int i = 1; i < grid.n_u - 1; ++i)
        for (int j = 0; j < grid.n_sigma; ++j) {
            const AmbientPoint p =
                ambient_from_reduced(m, {grid.u_node(i), grid.sigma_center(j)});
            const Hermitian2 expected =
                a * (hat_metric(m, p) - theta_form(m, p));
            const Hermitian2 got = reduced_complex_hessian(geo, f, i, j);
            CHECK((got - expected).frobenius() < 1e-11 * expected.frobenius());
        }
}

TEST_CASE("reduced_complex_hessian matches the ambient FD oracle") {
    const HopfModuli m = make_moduli(2.0, 4.0);

    // torus-invariant manufactured potentials as ambient scalar fields
    const auto x_field = [&](const AmbientPoint& q) {
        const double x1 = std::log(std::abs(q.z1));
        const double x2 = std::log(std::abs(q.z2));
        return complexd{x1 * x1 + x2 * x2, 0.0};
    };
    const auto wave_field = [&](const AmbientPoint& q) {
        const ReducedCoord rc = reduced_from_ambient(m, q);
        const double w = 2.0 * 3.14159265358979323846 / m.period_L;
        return complexd{std::sin(w * rc.u) * rc.sigma * (1.0 - rc.sigma), 0.0};
    };

    const auto sample_to_grid = [&](const GridSpec& grid, auto&& field) {
        std::vector<double> f(grid.size());
        for (int i = 0; i < grid.n_u; ++i)
            for (int j = 0; j < grid.n_sigma; ++j)
                f[grid.index(i, j)] =
                    field(ambient_from_reduced(
                              m, {grid.u_node(i), grid.sigma_center(j)}))
                        .real();
        return f;
    };

    // manufactured fields need not be u-periodic, so skip the seam rows where
    // the wrapped stencil would see their jump
    const auto max_error = [&](int n, auto&& field) {
        const GridSpec grid{n, n, m.period_L};
        const FlowGeometry geo = FlowGeometry::build(m, grid);
        const std::vector<double> f = sample_to_grid(grid, field);
        double worst = 0.0;
        for (int i = 1; i < grid.n_u - 1; ++i)
            for (int j = 2; j < grid.n_sigma - 2; ++j) {
                const AmbientPoint p = ambient_from_reduced(
                    m, {grid.u_node(i), grid.sigma_center(j)});
                const Hermitian2 oracle = fd_complex_hessian(field, p, 1e-4);
                const Hermitian2 got = reduced_complex_hessian(geo, f, i, j);
                worst = std::max(worst, (got - oracle).frobenius());
            }
        return worst;
    };

    SUBCASE("quadratic in x") {
        const double e16 = max_error(16, x_field);
        const double e32 = max_error(32, x_field);
        CHECK(e16 < 0.05);
        // spatial order >= 1.8
        CHECK(std::log2(e16 / e32) > 1.8);
    }
    SUBCASE("u-wave times sigma bump") {
        const double e16 = max_error(16, wave_field);
        const double e32 = max_error(32, wave_field);
        CHECK(e16 < 0.05);
        CHECK(std::log2(e16 / e32) > 1.8);
    }
}
