#include "hopf/geometry.hpp"

#include <cmath>
#include <limits>

namespace hopf {

namespace {

bool finite(double x) { return std::isfinite(x); }

void require_nonzero(const AmbientPoint& p) {
    if (p.z1 == complexd{0.0, 0.0} && p.z2 == complexd{0.0, 0.0})
        throw std::invalid_argument("ambient point must be nonzero");
    if (!finite(p.z1.real()) || !finite(p.z1.imag()) || !finite(p.z2.real()) ||
        !finite(p.z2.imag()))
        throw std::invalid_argument("ambient point must be finite");
}

}  // namespace

HopfModuli make_moduli(double abs_alpha, double abs_beta) {
    if (!finite(abs_alpha) || !finite(abs_beta))
        throw std::invalid_argument("moduli must be finite");
    if (!(abs_alpha > 1.0) || !(abs_alpha <= abs_beta))
        throw std::invalid_argument(
            "parameters outside class-1 moduli: need 1 < |alpha| <= |beta|");
    const double la = std::log(abs_alpha);
    const double lb = std::log(abs_beta);
    HopfModuli m;
    m.abs_alpha = abs_alpha;
    m.abs_beta = abs_beta;
    m.k1 = la / (la + lb);
    m.k2 = lb / (la + lb);
    m.period_L = la + lb;
    return m;
}

double solve_phi(const HopfModuli& m, const AmbientPoint& p) {
    require_nonzero(p);
    const double a = std::norm(p.z1);
    const double b = std::norm(p.z2);

    // Axis points have closed-form roots.
    if (b == 0.0) return std::pow(a, 0.5 / m.k1);
    if (a == 0.0) return std::pow(b, 0.5 / m.k2);

    // F(s) = a s^{-2k1} + b s^{-2k2} - 1, strictly decreasing on (0, inf);
    // F'(s) = -Zt(s)/s with Zt(s) = 2 (k1 a s^{-2k1} + k2 b s^{-2k2}) > 0.
    const auto F = [&](double s) {
        return a * std::pow(s, -2.0 * m.k1) + b * std::pow(s, -2.0 * m.k2) - 1.0;
    };
    const auto Zt = [&](double s) {
        return 2.0 * (m.k1 * a * std::pow(s, -2.0 * m.k1) +
                      m.k2 * b * std::pow(s, -2.0 * m.k2));
    };

    double s = a + b;  // exact for the round case
    double f = F(s);
    if (f == 0.0) return s;

    // Bracket the root by doubling/halving from the initial guess.
    double lo, hi;
    if (f > 0.0) {
        lo = s;
        hi = s;
        for (int i = 0; i < 600 && F(hi) > 0.0; ++i) hi *= 2.0;
        if (F(hi) > 0.0) throw std::runtime_error("solve_phi: failed to bracket root");
    } else {
        hi = s;
        lo = s;
        for (int i = 0; i < 600 && F(lo) < 0.0; ++i) lo *= 0.5;
        if (F(lo) < 0.0) throw std::runtime_error("solve_phi: failed to bracket root");
    }

    // Safeguarded Newton: fall back to bisection when a step leaves the bracket.
    for (int it = 0; it < 200; ++it) {
        f = F(s);
        if (f == 0.0) return s;
        if (f > 0.0)
            lo = std::max(lo, s);
        else
            hi = std::min(hi, s);
        double next = s + s * f / Zt(s);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - s);
        s = next;
        if (step <= 1e-15 * s) return s;
    }
    throw std::runtime_error("solve_phi: no convergence within iteration budget");
}

double z_of_sigma(const HopfModuli& m, double sigma) {
    return 2.0 * (m.k2 - (m.k2 - m.k1) * sigma);
}

double z_function(const HopfModuli& m, const AmbientPoint& p) {
    const double phi = solve_phi(m, p);
    const double a = std::norm(p.z1);
    const double b = std::norm(p.z2);
    return 2.0 * (m.k1 * a * std::pow(phi, -2.0 * m.k1) +
                  m.k2 * b * std::pow(phi, -2.0 * m.k2));
}

ReducedCoord reduced_from_ambient(const HopfModuli& m, const AmbientPoint& p) {
    const double phi = solve_phi(m, p);
    double sigma = std::norm(p.z1) * std::pow(phi, -2.0 * m.k1);
    // Clamp roundoff; values within 1e-15 of an endpoint are treated as exact.
    sigma = std::min(1.0, std::max(0.0, sigma));
    if (sigma < 1e-15) sigma = 0.0;
    if (1.0 - sigma < 1e-15) sigma = 1.0;
    return ReducedCoord{std::log(phi), sigma};
}

AmbientPoint ambient_from_reduced(const HopfModuli& m, const ReducedCoord& rc) {
    if (!(rc.sigma >= 0.0 && rc.sigma <= 1.0))
        throw std::invalid_argument("sigma must lie in [0, 1]");
    if (rc.sigma == 0.0) return AmbientPoint{0.0, std::exp(m.k2 * rc.u)};
    if (rc.sigma == 1.0) return AmbientPoint{std::exp(m.k1 * rc.u), 0.0};
    const double x1 = m.k1 * rc.u + 0.5 * std::log(rc.sigma);
    const double x2 = m.k2 * rc.u + 0.5 * std::log(1.0 - rc.sigma);
    return AmbientPoint{std::exp(x1), std::exp(x2)};
}

AmbientPoint deck_scale(const HopfModuli& m, const AmbientPoint& p) {
    require_nonzero(p);
    return AmbientPoint{m.abs_alpha * p.z1, m.abs_beta * p.z2};
}

}  // namespace hopf
