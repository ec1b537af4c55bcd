#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopf/sampling.hpp"
#include "hopf/tensors.hpp"

using namespace hopf;

TEST_CASE("phi_gradient closed cases") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const ComplexGradient2 g = phi_gradient(sym, {{1.0, 0.5}, {0.25, -1.0}});
    // Phi = r^2, so Phi_i = conj(z_i)
    CHECK(std::abs(g.d1 - std::conj(complexd{1.0, 0.5})) < 1e-13);
    CHECK(std::abs(g.d2 - std::conj(complexd{0.25, -1.0})) < 1e-13);

    const HopfModuli m = make_moduli(2.0, 4.0);
    const ComplexGradient2 ax = phi_gradient(m, {1.0, 0.0});
    CHECK(ax.d1.real() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(std::abs(ax.d2) == 0.0);

    const ComplexGradient2 g11 = phi_gradient(m, {1.0, 1.0});
    CHECK(g11.d1.real() == doctest::Approx(1.3806630978898891).epsilon(1e-13));
}

TEST_CASE("phi_hessian: corrected variant is the identity on the round surface") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    PointSampler gen(sym, 17);
    for (int i = 0; i < 100; ++i) {
        const AmbientPoint p = gen.next();
        const Hermitian2 h = phi_hessian(sym, p, HessianVariant::corrected);
        CHECK(h.h11 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(h.h22 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(h.h12) < 1e-12);

        // the printed transcription instead adds the Theta-shaped term
        const Hermitian2 printed = phi_hessian(sym, p, HessianVariant::printed);
        const double r2 = std::norm(p.z1) + std::norm(p.z2);
        CHECK(printed.h11 ==
              doctest::Approx(1.0 + std::norm(p.z1) / r2).epsilon(1e-12));
        CHECK((printed - h).frobenius() > 0.5);
    }
}

TEST_CASE("hat_metric determinant identity") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const AmbientPoint q{{0.3, 0.4}, {1.0, -0.2}};
    const double r2 = std::norm(q.z1) + std::norm(q.z2);
    const Hermitian2 g = hat_metric(sym, q);
    CHECK(g.h11 == doctest::Approx(1.0 / r2).epsilon(1e-13));
    CHECK(g.h22 == doctest::Approx(1.0 / r2).epsilon(1e-13));

    const HopfModuli m = make_moduli(2.0, 4.0);
    CHECK(hat_metric(m, {1.0, 0.0}).det() ==
          doctest::Approx(27.0 / 8.0).epsilon(1e-13));
    CHECK(hat_metric(m, {1.0, 1.0}).det() ==
          doctest::Approx(0.3018691769624716).epsilon(1e-13));

    for (auto [a, b] : {std::pair{2.0, 4.0}, {1.5, 3.0}}) {
        const HopfModuli mm = make_moduli(a, b);
        PointSampler gen(mm, 23);
        for (int i = 0; i < 1000; ++i) {
            const AmbientPoint p = gen.next();
            const double phi = solve_phi(mm, p);
            const double z = z_function(mm, p);
            const double det = hat_metric(mm, p).det();
            CHECK(std::abs(det * phi * phi * z * z * z - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("theta_form is rank one and PSD") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const Hermitian2 th = theta_form(sym, {1.0, 0.0});
    CHECK(th.h11 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(th.h22 == 0.0);

    const HopfModuli m = make_moduli(2.0, 4.0);
    const Hermitian2 ax = theta_form(m, {0.0, 1.0});
    CHECK(ax.h11 == 0.0);
    CHECK(ax.h22 == doctest::Approx(9.0 / 16.0).epsilon(1e-14));

    PointSampler gen(m, 29);
    for (int i = 0; i < 200; ++i) {
        const Hermitian2 t = theta_form(m, gen.next());
        const double scale = t.frobenius();
        CHECK(std::abs(t.det()) < 1e-12 * scale * scale);
        CHECK(t.eig_min() > -1e-12 * scale);
    }
}

TEST_CASE("chi_metric is diagonal with det 1/Phi^2") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const AmbientPoint q{{0.8, 0.1}, {-0.5, 0.9}};
    const Hermitian2 chi = chi_metric(sym, q);
    const Hermitian2 gh = hat_metric(sym, q);
    CHECK(chi.h11 == doctest::Approx(gh.h11).epsilon(1e-13));
    CHECK(chi.h22 == doctest::Approx(gh.h22).epsilon(1e-13));

    const HopfModuli m = make_moduli(2.0, 4.0);
    const double y = (std::sqrt(5.0) - 1.0) / 2.0;  // Phi^{-2/3} at (1,1)
    const Hermitian2 c = chi_metric(m, {1.0, 1.0});
    CHECK(c.h11 == doctest::Approx(y).epsilon(1e-13));
    CHECK(c.h22 == doctest::Approx(y * y).epsilon(1e-13));
    CHECK(chi_metric(m, {1.0, 0.0}).h11 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(chi_metric(m, {1.0, 0.0}).h22 == doctest::Approx(1.0).epsilon(1e-14));

    PointSampler gen(m, 31);
    for (int i = 0; i < 200; ++i) {
        const AmbientPoint p = gen.next();
        const double phi = solve_phi(m, p);
        CHECK(chi_metric(m, p).det() ==
              doctest::Approx(1.0 / (phi * phi)).epsilon(1e-12));
    }
}

TEST_CASE("ricci_chi = 2 ghat - 2 Theta is PSD with ghat-trace 2") {
    const HopfModuli sym = make_moduli(2.0, 2.0);
    const Hermitian2 r = ricci_chi(sym, {1.0, 0.0});
    CHECK(r.h11 == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(r.h22 == doctest::Approx(2.0).epsilon(1e-13));

    const HopfModuli m = make_moduli(2.0, 4.0);
    PointSampler gen(m, 37);
    for (int i = 0; i < 500; ++i) {
        const AmbientPoint p = gen.next();
        const Hermitian2 g = hat_metric(m, p);
        const Hermitian2 ric = ricci_chi(m, p);
        CHECK(ric.eig_min() >= -1e-10 * g.frobenius());
        CHECK((g - theta_form(m, p)).eig_min() >= -1e-10 * g.frobenius());
        CHECK(trace_pair(g, ric) == doctest::Approx(2.0).epsilon(1e-10));
    }
}

TEST_CASE("reference_metric determinant law") {
    const HopfModuli m = make_moduli(2.0, 4.0);
    const AmbientPoint p{1.0, 1.0};
    const Hermitian2 g = hat_metric(m, p);
    CHECK((reference_metric(m, 0.0, p) - g).frobenius() < 1e-14);
    CHECK(reference_metric(m, 0.25, p).det() ==
          doctest::Approx(0.5 * 0.3018691769624716).epsilon(1e-12));
    CHECK(reference_metric(m, 0.499999, p).det() ==
          doctest::Approx(2e-6 * g.det()).epsilon(1e-6));
    CHECK_THROWS_AS(reference_metric(m, 0.5, p), std::invalid_argument);
    CHECK_THROWS_AS(reference_metric(m, 0.7, p), std::invalid_argument);

    PointSampler gen(m, 41);
    for (int i = 0; i < 300; ++i) {
        const AmbientPoint q = gen.next();
        const double dg = hat_metric(m, q).det();
        for (double t : {0.0, 0.1, 0.25, 0.4, 0.49}) {
            const double d = reference_metric(m, t, q).det();
            CHECK(std::abs(d - (1.0 - 2.0 * t) * dg) < 1e-9 * dg);
        }
    }
}

TEST_CASE("trace_pair basics") {
    const Hermitian2 a{2.0, 1.0, {0.0, 0.0}};
    const Hermitian2 b{1.0, 1.0, {0.0, 0.0}};
    CHECK(trace_pair(a, b) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(trace_pair(a, a) == doctest::Approx(2.0).epsilon(1e-15));

    const Hermitian2 singular{1.0, 1.0, {1.0, 0.0}};
    CHECK_THROWS_AS(trace_pair(singular, b), std::invalid_argument);

    const HopfModuli m = make_moduli(2.0, 4.0);
    PointSampler gen(m, 43);
    for (int i = 0; i < 1000; ++i) {
        const AmbientPoint p = gen.next();
        const Hermitian2 g = hat_metric(m, p);
        CHECK(trace_pair(g, g) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(trace_pair(g, theta_form(m, p)) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}
