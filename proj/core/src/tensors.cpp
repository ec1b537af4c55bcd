#include "hopf/tensors.hpp"

#include <cmath>

namespace hopf {

namespace {

struct PhiData {
    double phi;
    double z;           // Z at the point
    double p1;          // Phi^{-2 k1}
    double p2;          // Phi^{-2 k2}
    double a;           // |z1|^2
    double b;           // |z2|^2
};

PhiData phi_data(const HopfModuli& m, const AmbientPoint& p) {
    PhiData d;
    d.phi = solve_phi(m, p);
    d.a = std::norm(p.z1);
    d.b = std::norm(p.z2);
    d.p1 = std::pow(d.phi, -2.0 * m.k1);
    d.p2 = std::pow(d.phi, -2.0 * m.k2);
    d.z = 2.0 * (m.k1 * d.a * d.p1 + m.k2 * d.b * d.p2);
    return d;
}

ComplexGradient2 gradient_from(const HopfModuli& m, const AmbientPoint& p,
                               const PhiData& d) {
    // Phi^{1-2ki} = Phi * Phi^{-2ki}
    return ComplexGradient2{std::conj(p.z1) * (d.phi * d.p1 / d.z),
                            std::conj(p.z2) * (d.phi * d.p2 / d.z)};
}

}  // namespace

ComplexGradient2 phi_gradient(const HopfModuli& m, const AmbientPoint& p) {
    const PhiData d = phi_data(m, p);
    return gradient_from(m, p, d);
}

Hermitian2 phi_hessian(const HopfModuli& m, const AmbientPoint& p,
                       HessianVariant variant) {
    const PhiData d = phi_data(m, p);
    const ComplexGradient2 g = gradient_from(m, p, d);

    const double w = variant == HessianVariant::corrected
                         ? m.k1 * m.k1 * d.a * d.p1 + m.k2 * m.k2 * d.b * d.p2
                         : m.k1 * d.a * d.p1 + m.k2 * d.b * d.p2;
    const double common = 4.0 * w / d.z;

    const auto coeff = [&](double ki, double kj) {
        return 1.0 - 2.0 * ki - 2.0 * kj + common;
    };

    Hermitian2 h;
    h.h11 = d.phi * d.p1 / d.z + coeff(m.k1, m.k1) * std::norm(g.d1) / d.phi;
    h.h22 = d.phi * d.p2 / d.z + coeff(m.k2, m.k2) * std::norm(g.d2) / d.phi;
    h.h12 = coeff(m.k1, m.k2) * g.d1 * std::conj(g.d2) / d.phi;
    return h;
}

Hermitian2 hat_metric(const HopfModuli& m, const AmbientPoint& p) {
    Hermitian2 h = phi_hessian(m, p, HessianVariant::corrected);
    const double phi = solve_phi(m, p);
    h *= 1.0 / phi;
    if (!h.positive_definite())
        throw std::runtime_error("hat_metric: positivity failure (implementation bug)");
    return h;
}

Hermitian2 theta_form(const HopfModuli& m, const AmbientPoint& p) {
    const PhiData d = phi_data(m, p);
    const ComplexGradient2 g = gradient_from(m, p, d);
    Hermitian2 h;
    h.h11 = std::norm(g.d1) / (d.phi * d.phi);
    h.h22 = std::norm(g.d2) / (d.phi * d.phi);
    h.h12 = g.d1 * std::conj(g.d2) / (d.phi * d.phi);
    return h;
}

Hermitian2 chi_metric(const HopfModuli& m, const AmbientPoint& p) {
    const PhiData d = phi_data(m, p);
    return Hermitian2{d.p1, d.p2, {0.0, 0.0}};
}

Hermitian2 ricci_chi(const HopfModuli& m, const AmbientPoint& p) {
    return 2.0 * (hat_metric(m, p) - theta_form(m, p));
}

Hermitian2 reference_metric(const HopfModuli& m, double t, const AmbientPoint& p) {
    if (!(t >= 0.0 && t < 0.5))
        throw std::invalid_argument("reference_metric: t must lie in [0, 1/2)");
    return (1.0 - 2.0 * t) * hat_metric(m, p) + 2.0 * t * theta_form(m, p);
}

}  // namespace hopf
