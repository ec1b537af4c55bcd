#include "hopf/fd.hpp"

#include <array>

namespace hopf {

namespace {

// Real coordinates (a1, b1, a2, b2) of C^2.
AmbientPoint shift(const AmbientPoint& p, int axis, double h) {
    AmbientPoint q = p;
    switch (axis) {
        case 0: q.z1 += complexd{h, 0.0}; break;
        case 1: q.z1 += complexd{0.0, h}; break;
        case 2: q.z2 += complexd{h, 0.0}; break;
        default: q.z2 += complexd{0.0, h}; break;
    }
    return q;
}

complexd d_real(const ScalarField& f, const AmbientPoint& p, int axis, double h) {
    return (f(shift(p, axis, h)) - f(shift(p, axis, -h))) / (2.0 * h);
}

complexd d2_real(const ScalarField& f, const AmbientPoint& p, int axis, double h) {
    return (f(shift(p, axis, h)) - 2.0 * f(p) + f(shift(p, axis, -h))) / (h * h);
}

// Cross second derivative d^2 f / (dx_a dx_b), a != b, 4-point stencil.
complexd d2_cross(const ScalarField& f, const AmbientPoint& p, int a, int b, double h) {
    const complexd fpp = f(shift(shift(p, a, h), b, h));
    const complexd fpm = f(shift(shift(p, a, h), b, -h));
    const complexd fmp = f(shift(shift(p, a, -h), b, h));
    const complexd fmm = f(shift(shift(p, a, -h), b, -h));
    return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
}

}  // namespace

ComplexGradient2 fd_complex_derivative(const ScalarField& f, const AmbientPoint& p,
                                       double h) {
    const complexd i{0.0, 1.0};
    ComplexGradient2 g;
    g.d1 = 0.5 * (d_real(f, p, 0, h) - i * d_real(f, p, 1, h));
    g.d2 = 0.5 * (d_real(f, p, 2, h) - i * d_real(f, p, 3, h));
    return g;
}

complexd fd_dz_dzbar(const ScalarField& f, const AmbientPoint& p, int k, int l,
                     double h) {
    const complexd i{0.0, 1.0};
    const int ak = 2 * k, bk = 2 * k + 1;
    const int al = 2 * l, bl = 2 * l + 1;
    if (k == l) {
        // (d_a^2 + d_b^2) f / 4; the a-b cross terms cancel for smooth f.
        return 0.25 * (d2_real(f, p, ak, h) + d2_real(f, p, bk, h));
    }
    // (d_ak - i d_bk)(d_al + i d_bl) f / 4
    return 0.25 * (d2_cross(f, p, ak, al, h) + i * d2_cross(f, p, ak, bl, h) -
                   i * d2_cross(f, p, bk, al, h) + d2_cross(f, p, bk, bl, h));
}

Hermitian2 fd_complex_hessian(const ScalarField& f, const AmbientPoint& p, double h) {
    Hermitian2 out;
    out.h11 = std::real(fd_dz_dzbar(f, p, 0, 0, h));
    out.h22 = std::real(fd_dz_dzbar(f, p, 1, 1, h));
    out.h12 = fd_dz_dzbar(f, p, 0, 1, h);
    return out;
}

}  // namespace hopf
