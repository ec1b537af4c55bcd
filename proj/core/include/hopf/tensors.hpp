#pragma once

#include "hopf/geometry.hpp"
#include "hopf/hermitian2.hpp"

namespace hopf {

/// The complex Hessian of Phi admits two transcriptions that differ in whether
/// the k_a weights inside the auxiliary sum are squared. The squared form is
/// the one consistent with differentiating the defining relation (it is the
/// only one that gives Hess Phi = identity on the round surface); the unsquared
/// form is kept so the verification suite can demonstrate the discrepancy.
enum class HessianVariant { corrected, printed };

/// Phi_i = conj(z_i) Phi^{1-2 k_i} / Z.
ComplexGradient2 phi_gradient(const HopfModuli& m, const AmbientPoint& p);

/// Phi_{i jbar} = delta_ij Phi^{1-2ki}/Z
///             + (1 - 2ki - 2kj + (4/Z) W) Phi_i conj(Phi_j) / Phi,
/// with W = sum_a k_a^2 |z_a|^2 Phi^{-2 k_a} for the corrected variant and
/// W = sum_a k_a |z_a|^2 Phi^{-2 k_a} (= Z/2) for the printed one.
Hermitian2 phi_hessian(const HopfModuli& m, const AmbientPoint& p,
                       HessianVariant variant = HessianVariant::corrected);

/// ghat_{i jbar} = Phi_{i jbar} / Phi; positive definite with
/// det ghat = 1 / (Phi^2 Z^3).
Hermitian2 hat_metric(const HopfModuli& m, const AmbientPoint& p);

/// Theta_{i jbar} = Phi_i conj(Phi_j) / Phi^2; rank one, PSD, det = 0.
Hermitian2 theta_form(const HopfModuli& m, const AmbientPoint& p);

/// chi_{i jbar} = Phi^{-2 k_i} delta_ij; diagonal with det chi = Phi^{-2}.
/// Coincides with ghat exactly when abs_alpha = abs_beta.
Hermitian2 chi_metric(const HopfModuli& m, const AmbientPoint& p);

/// Chern-Ricci form of chi: Ric(chi) = 2 ddbar log Phi = 2 ghat - 2 Theta >= 0.
Hermitian2 ricci_chi(const HopfModuli& m, const AmbientPoint& p);

/// Reference family omega_t = (1 - 2t) ghat + 2t Theta, positive definite for
/// 0 <= t < 1/2 with det(omega_t) = (1 - 2t) det ghat pointwise.
Hermitian2 reference_metric(const HopfModuli& m, double t, const AmbientPoint& p);

}  // namespace hopf
