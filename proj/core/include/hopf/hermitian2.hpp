#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hopf {

using complexd = std::complex<double>;

/// A 2x2 Hermitian matrix. Stores the upper triangle; h21 is implied as
/// conj(h12). Used for real (1,1)-forms and Hermitian metrics in coordinates.
struct Hermitian2 {
    double h11 = 0.0;
    double h22 = 0.0;
    complexd h12{0.0, 0.0};

    double det() const { return h11 * h22 - std::norm(h12); }
    double trace() const { return h11 + h22; }

    // Eigenvalues are real: (tr +- sqrt(tr^2 - 4 det)) / 2.
    double eig_min() const {
        const double tr = trace();
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det()));
        return 0.5 * (tr - disc);
    }
    double eig_max() const {
        const double tr = trace();
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det()));
        return 0.5 * (tr + disc);
    }

    double frobenius() const {
        return std::sqrt(h11 * h11 + h22 * h22 + 2.0 * std::norm(h12));
    }

    bool positive_definite() const { return h11 > 0.0 && det() > 0.0; }

    Hermitian2& operator+=(const Hermitian2& o) {
        h11 += o.h11;
        h22 += o.h22;
        h12 += o.h12;
        return *this;
    }
    Hermitian2& operator-=(const Hermitian2& o) {
        h11 -= o.h11;
        h22 -= o.h22;
        h12 -= o.h12;
        return *this;
    }
    Hermitian2& operator*=(double s) {
        h11 *= s;
        h22 *= s;
        h12 *= s;
        return *this;
    }

    friend Hermitian2 operator+(Hermitian2 a, const Hermitian2& b) { return a += b; }
    friend Hermitian2 operator-(Hermitian2 a, const Hermitian2& b) { return a -= b; }
    friend Hermitian2 operator*(double s, Hermitian2 a) { return a *= s; }
};

/// Components of a (1,0)-gradient (f_1, f_2) = (d f / d z_1, d f / d z_2).
struct ComplexGradient2 {
    complexd d1{0.0, 0.0};
    complexd d2{0.0, 0.0};
};

/// tr_a b = a^{ij} b_{ij} contracted with the inverse of a. For 2x2 Hermitian
/// pairs this is (a22 b11 + a11 b22 - 2 Re(conj(a12) b12)) / det a, and equals
/// 2 (a ^ b) / a^2 when a, b are the (1,1)-forms. tr_a a = 2.
inline double trace_pair(const Hermitian2& a, const Hermitian2& b) {
    const double d = a.det();
    if (!(a.h11 > 0.0) || !(d > 0.0))
        throw std::invalid_argument("trace_pair: first argument must be positive definite");
    return (a.h22 * b.h11 + a.h11 * b.h22 - 2.0 * std::real(std::conj(a.h12) * b.h12)) / d;
}

/// Pairing h(v, conj(v)) = h_{ij} v^i conj(v^j); real and >= 0 for PSD h.
inline double pair_vector(const Hermitian2& h, complexd v1, complexd v2) {
    return h.h11 * std::norm(v1) + h.h22 * std::norm(v2) +
           2.0 * std::real(h.h12 * v1 * std::conj(v2));
}

}  // namespace hopf
