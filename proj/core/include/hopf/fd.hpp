#pragma once

#include <functional>

#include "hopf/hermitian2.hpp"
#include "hopf/geometry.hpp"

namespace hopf {

/// Scalar field on C^2 (real- or complex-valued) sampled by the FD oracles.
using ScalarField = std::function<complexd(const AmbientPoint&)>;

/// Central-difference d f / d z_i = (d/da_i - i d/db_i) f / 2 with z = a + i b.
/// Second-order accurate in h. Independent of every closed-form derivative in
/// this library; serves as the oracle they are checked against.
ComplexGradient2 fd_complex_derivative(const ScalarField& f, const AmbientPoint& p,
                                       double h);

/// Mixed second derivatives d^2 f / (d z_i d zbar_j) via composed central
/// differences: the diagonal entries use the 4d Laplacian quarter, the
/// off-diagonal entry uses four 4-point cross stencils. For real-valued f the
/// result is Hermitian and is returned as such.
Hermitian2 fd_complex_hessian(const ScalarField& f, const AmbientPoint& p, double h);

/// Off-diagonal-capable variant: d^2 f / (d z_k d zbar_l) for one index pair,
/// valid for complex-valued f (no Hermitian symmetry assumed).
complexd fd_dz_dzbar(const ScalarField& f, const AmbientPoint& p, int k, int l,
                     double h);

}  // namespace hopf
