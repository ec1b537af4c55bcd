#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/geometry.hpp"
#include "hopf/tensors.hpp"

namespace hopf {

/// One row of the identity-verification suite. pass <=> max_residual <= tolerance.
struct VerificationReport {
    std::string identity;
    long samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string notes;
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    long samples_algebraic = 1000;  // closed-form identities
    long samples_fd = 100;          // FD-oracle comparisons
    double h_first = 1e-4;          // first derivatives
    double h_second = 1e-3;         // second derivatives
    double h_fourth_rel = 5e-3;     // fourth-derivative-level checks, x point scale
    double sigma_margin = 1e-3;     // axis exclusion for FD sampling
    HessianVariant hessian_variant = HessianVariant::corrected;
};

// Closed-form algebraic identities (no differentiation), tolerance 1e-9.
VerificationReport verify_det_identity(const HopfModuli& m, long samples,
                                       std::uint64_t seed);
VerificationReport verify_trace_identity(const HopfModuli& m, long samples,
                                         std::uint64_t seed);

// FD fourth-derivative check of d dbar omega_hat = 0 (single (2,2) component),
// normalized by the magnitude of its four constituent terms.
VerificationReport verify_gauduchon(const HopfModuli& m, long samples,
                                    std::uint64_t seed, double h_rel);

// Same stencil applied to the non-Gauduchon control form e^{|z1|^2} delta_ij;
// passes when the normalized scalar is O(1), demonstrating the test's power.
VerificationReport verify_gauduchon_control(double h_rel);

// d omega_hat = eps theta^{(1,0)} ^ omega_hat componentwise; determines the
// sign eps in {-1, +1} empirically and reports it in the notes.
VerificationReport verify_lck(const HopfModuli& m, long samples, std::uint64_t seed,
                              double h);

/// Runs the full suite for a single moduli point: solver residuals, scaling
/// equivariance, chart round-trips, Z bounds, determinant/trace identities,
/// positivity corollaries, reference-family determinant law, gradient and
/// Hessian FD cross-checks, the Hessian-variant comparison, Gauduchon and LCK.
/// Deterministic given the seed.
std::vector<VerificationReport> run_suite(const HopfModuli& m, const VerifyConfig& cfg);

}  // namespace hopf
