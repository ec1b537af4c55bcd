#include "hopf/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hopf/fd.hpp"
#include "hopf/sampling.hpp"

namespace hopf {

namespace {

double point_scale(const AmbientPoint& p) {
    return std::max(std::abs(p.z1), std::abs(p.z2));
}

// Defining relation residual |a Phi^{-2k1} + b Phi^{-2k2} - 1| at the solve.
double relation_residual(const HopfModuli& m, const AmbientPoint& p, double phi) {
    return std::abs(std::norm(p.z1) * std::pow(phi, -2.0 * m.k1) +
                    std::norm(p.z2) * std::pow(phi, -2.0 * m.k2) - 1.0);
}

VerificationReport make_report(std::string name, long samples, double residual,
                               double tol, std::string notes = {}) {
    VerificationReport r;
    r.identity = std::move(name);
    r.samples = samples;
    r.max_residual = residual;
    r.tolerance = tol;
    r.pass = residual <= tol;
    r.notes = std::move(notes);
    return r;
}

// Sample set for algebraic identities: random interior points plus axis points
// (sigma in {0,1}) at a few radii and phases.
std::vector<AmbientPoint> algebraic_points(const HopfModuli& m, long samples,
                                           std::uint64_t seed) {
    PointSampler gen(m, seed);
    std::vector<AmbientPoint> pts;
    pts.reserve(static_cast<std::size_t>(samples) + 8);
    for (long i = 0; i < samples; ++i) pts.push_back(gen.next());
    for (double r : {0.5, 1.0, 3.0, 10.0}) {
        const complexd w = r * complexd{std::cos(0.7), std::sin(0.7)};
        pts.push_back(AmbientPoint{w, 0.0});
        pts.push_back(AmbientPoint{0.0, w});
    }
    return pts;
}

complexd ghat_component(const HopfModuli& m, const AmbientPoint& p, int i, int j) {
    const Hermitian2 g = hat_metric(m, p);
    if (i == 0 && j == 0) return g.h11;
    if (i == 1 && j == 1) return g.h22;
    if (i == 0 && j == 1) return g.h12;
    return std::conj(g.h12);
}

}  // namespace

VerificationReport verify_det_identity(const HopfModuli& m, long samples,
                                       std::uint64_t seed) {
    double worst = 0.0;
    for (const AmbientPoint& p : algebraic_points(m, samples, seed)) {
        const double phi = solve_phi(m, p);
        const double z = z_function(m, p);
        const double det = hat_metric(m, p).det();
        worst = std::max(worst, std::abs(det * phi * phi * z * z * z - 1.0));
    }
    return make_report("det-identity", samples, worst, 1e-9);
}

VerificationReport verify_trace_identity(const HopfModuli& m, long samples,
                                         std::uint64_t seed) {
    double worst = 0.0;
    for (const AmbientPoint& p : algebraic_points(m, samples, seed)) {
        const double tr = trace_pair(hat_metric(m, p), theta_form(m, p));
        worst = std::max(worst, std::abs(tr - 1.0));
    }
    return make_report("trace-identity", samples, worst, 1e-9);
}

VerificationReport verify_gauduchon(const HopfModuli& m, long samples,
                                    std::uint64_t seed, double h_rel) {
    PointSampler gen(m, seed);
    double worst = 0.0;
    for (long n = 0; n < samples; ++n) {
        const AmbientPoint p = gen.next_away_from_axes(1e-3);
        const double h = h_rel * point_scale(p);
        const ScalarField g11 = [&](const AmbientPoint& q) { return ghat_component(m, q, 0, 0); };
        const ScalarField g22 = [&](const AmbientPoint& q) { return ghat_component(m, q, 1, 1); };
        const ScalarField g12 = [&](const AmbientPoint& q) { return ghat_component(m, q, 0, 1); };
        const ScalarField g21 = [&](const AmbientPoint& q) { return ghat_component(m, q, 1, 0); };
        // Single component of d dbar omega_hat (up to a constant).
        const complexd t1 = fd_dz_dzbar(g22, p, 0, 0, h);
        const complexd t2 = fd_dz_dzbar(g11, p, 1, 1, h);
        const complexd t3 = fd_dz_dzbar(g21, p, 0, 1, h);
        const complexd t4 = fd_dz_dzbar(g12, p, 1, 0, h);
        const complexd s = t1 + t2 - t3 - t4;
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3),
                                       std::abs(t4)});
        worst = std::max(worst, std::abs(s) / scale);
    }
    return make_report("gauduchon", samples, worst, 1e-4);
}

VerificationReport verify_gauduchon_control(double h_rel) {
    // i e^{|z1|^2} delta_ij dz^i ^ dzbar^j is not Gauduchon; the same scalar
    // evaluates to O(1) on it, demonstrating the power of the check. Reported
    // residual is the shortfall below the required 0.1.
    const ScalarField e11 = [](const AmbientPoint& q) {
        return complexd{std::exp(std::norm(q.z1)), 0.0};
    };
    const ScalarField zero = [](const AmbientPoint&) { return complexd{0.0, 0.0}; };
    double min_ratio = 1e300;
    const AmbientPoint pts[] = {{{0.7, 0.1}, {0.5, -0.3}}, {{1.1, 0.0}, {0.9, 0.2}}};
    for (const AmbientPoint& p : pts) {
        const double h = h_rel * point_scale(p);
        const complexd t1 = fd_dz_dzbar(e11, p, 0, 0, h);  // d1 d1bar of g22 = e11
        const complexd t2 = fd_dz_dzbar(e11, p, 1, 1, h);  // d2 d2bar of g11 = e11
        const complexd t3 = fd_dz_dzbar(zero, p, 0, 1, h);
        const complexd t4 = fd_dz_dzbar(zero, p, 1, 0, h);
        const complexd s = t1 + t2 - t3 - t4;
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3),
                                       std::abs(t4)});
        min_ratio = std::min(min_ratio, std::abs(s) / scale);
    }
    const double shortfall = std::max(0.0, 0.1 - min_ratio);
    return make_report("gauduchon-control", 2, shortfall, 0.0,
                       "normalized |S| = " + std::to_string(min_ratio) +
                           " (must exceed 0.1)");
}

VerificationReport verify_lck(const HopfModuli& m, long samples, std::uint64_t seed,
                              double h) {
    PointSampler gen(m, seed);
    double worst_plus = 0.0, worst_minus = 0.0;
    for (long n = 0; n < samples; ++n) {
        const AmbientPoint p = gen.next_away_from_axes(1e-3);
        const double hp = h * point_scale(p);
        const double phi = solve_phi(m, p);
        const ComplexGradient2 grad = phi_gradient(m, p);
        const complexd theta1 = grad.d1 / phi;
        const complexd theta2 = grad.d2 / phi;
        const Hermitian2 g = hat_metric(m, p);
        const complexd gh[2][2] = {{g.h11, g.h12}, {std::conj(g.h12), g.h22}};
        for (int j = 0; j < 2; ++j) {
            const ScalarField f2j = [&](const AmbientPoint& q) {
                return ghat_component(m, q, 1, j);
            };
            const ScalarField f1j = [&](const AmbientPoint& q) {
                return ghat_component(m, q, 0, j);
            };
            // d omega_hat components: d_1 ghat_{2 jbar} - d_2 ghat_{1 jbar}.
            const complexd lhs = fd_complex_derivative(f2j, p, hp).d1 -
                                 fd_complex_derivative(f1j, p, hp).d2;
            const complexd rhs = theta1 * gh[1][j] - theta2 * gh[0][j];
            const double scale =
                std::abs(theta1 * gh[1][j]) + std::abs(theta2 * gh[0][j]) + 1e-300;
            worst_plus = std::max(worst_plus, std::abs(lhs - rhs) / scale);
            worst_minus = std::max(worst_minus, std::abs(lhs + rhs) / scale);
        }
    }
    const bool minus_fits = worst_minus <= 1e-6;
    const bool plus_fits = worst_plus <= 1e-6;
    if (!minus_fits && !plus_fits) {
        return make_report("lck-sign", samples, std::min(worst_plus, worst_minus),
                           1e-6, "neither sign fits (transcription bug)");
    }
    const int eps = minus_fits ? -1 : +1;
    return make_report("lck-sign", samples, minus_fits ? worst_minus : worst_plus,
                       1e-6, std::string("eps = ") + (eps < 0 ? "-1" : "+1"));
}

std::vector<VerificationReport> run_suite(const HopfModuli& m, const VerifyConfig& cfg) {
    std::vector<VerificationReport> out;
    const long ns = cfg.samples_algebraic;
    const long nf = cfg.samples_fd;

    // --- solver residual and monotone bracketing ---
    {
        double worst = 0.0, bracket = -1e300;
        for (const AmbientPoint& p : algebraic_points(m, ns, cfg.seed)) {
            const double phi = solve_phi(m, p);
            worst = std::max(worst, relation_residual(m, p, phi));
            const auto F = [&](double s) {
                return std::norm(p.z1) * std::pow(s, -2.0 * m.k1) +
                       std::norm(p.z2) * std::pow(s, -2.0 * m.k2) - 1.0;
            };
            // strict decrease: F must straddle 0 across the returned root
            const double margin =
                std::min(F(phi * (1.0 - 1e-6)), -F(phi * (1.0 + 1e-6)));
            bracket = std::max(bracket, -margin);
        }
        out.push_back(make_report("phi-residual", ns, worst, 1e-13));
        out.push_back(make_report("phi-bracketing", ns, bracket, 0.0,
                                  "negative residual = straddle margin"));
    }

    // --- scaling equivariance and deck invariance of scalars ---
    {
        PointSampler gen(m, cfg.seed + 1);
        const double c = m.abs_alpha * m.abs_beta;
        double worst = 0.0, worst_scalar = 0.0;
        for (long i = 0; i < ns; ++i) {
            const AmbientPoint p = gen.next();
            const AmbientPoint q = deck_scale(m, p);
            const double phi_p = solve_phi(m, p), phi_q = solve_phi(m, q);
            worst = std::max(worst, std::abs(phi_q - c * phi_p) / (c * phi_p));
            worst = std::max(worst,
                             std::abs(z_function(m, q) - z_function(m, p)));
            const double dp = hat_metric(m, p).det() * phi_p * phi_p;
            const double dq = hat_metric(m, q).det() * phi_q * phi_q;
            worst_scalar = std::max(worst_scalar, std::abs(dq - dp) / std::abs(dp));
            const double tp = trace_pair(hat_metric(m, p), theta_form(m, p));
            const double tq = trace_pair(hat_metric(m, q), theta_form(m, q));
            worst_scalar = std::max(worst_scalar, std::abs(tq - tp));
        }
        out.push_back(make_report("scaling-equivariance", ns, worst, 1e-12));
        out.push_back(make_report("deck-invariance", ns, worst_scalar, 1e-9));
    }

    // --- chart round-trip and Z bounds ---
    {
        PointSampler gen(m, cfg.seed + 2);
        double worst = 0.0, zb = 0.0;
        for (long i = 0; i < ns; ++i) {
            const double u = gen.uniform(0.0, m.period_L);
            const double sigma = gen.uniform(1e-9, 1.0 - 1e-9);
            const AmbientPoint p = ambient_from_reduced(m, ReducedCoord{u, sigma});
            const ReducedCoord rc = reduced_from_ambient(m, p);
            worst = std::max(worst, std::abs(rc.u - u));
            worst = std::max(worst, std::abs(rc.sigma - sigma));
            const double z = z_function(m, gen.next());
            zb = std::max(zb, std::max(2.0 * m.k1 - z, z - 2.0 * m.k2));
        }
        out.push_back(make_report("chart-roundtrip", ns, worst, 1e-12));
        out.push_back(make_report("z-bounds", ns, zb, 1e-12));
    }

    // --- algebraic tensor identities ---
    out.push_back(verify_det_identity(m, ns, cfg.seed));
    out.push_back(verify_trace_identity(m, ns, cfg.seed));
    {
        double rank1 = 0.0, psd = 0.0, ric_psd = 0.0, ric_tr = 0.0, ref = 0.0;
        for (const AmbientPoint& p : algebraic_points(m, ns, cfg.seed + 3)) {
            const Hermitian2 g = hat_metric(m, p);
            const Hermitian2 th = theta_form(m, p);
            const double gn = g.frobenius();
            const double thn = th.frobenius();
            rank1 = std::max(rank1, std::abs(th.det()) / (thn * thn));
            psd = std::max(psd, -(g - th).eig_min() / gn);
            const Hermitian2 ric = ricci_chi(m, p);
            ric_psd = std::max(ric_psd, -ric.eig_min() / gn);
            ric_tr = std::max(ric_tr, std::abs(trace_pair(g, ric) - 2.0));
            const double dg = g.det();
            for (double t : {0.0, 0.1, 0.25, 0.4, 0.49}) {
                const double dref = reference_metric(m, t, p).det();
                ref = std::max(ref, std::abs(dref - (1.0 - 2.0 * t) * dg) / dg);
            }
        }
        out.push_back(make_report("theta-rank-one", ns, rank1, 1e-12));
        out.push_back(make_report("ghat-theta-psd", ns, psd, 1e-10));
        out.push_back(make_report("ric-chi-psd", ns, ric_psd, 1e-10));
        out.push_back(make_report("ric-chi-trace", ns, ric_tr, 1e-9));
        out.push_back(make_report("reference-det-law", ns, ref, 1e-9,
                                  "t in {0, 0.1, 0.25, 0.4, 0.49}"));
    }

    // --- FD cross-checks of the closed-form derivatives ---
    const ScalarField phi_field = [&](const AmbientPoint& q) {
        return complexd{solve_phi(m, q), 0.0};
    };
    {
        PointSampler gen(m, cfg.seed + 4);
        double worst_g = 0.0, worst_h = 0.0;
        double g_h1 = 0.0, g_h2 = 0.0, h_h1 = 0.0, h_h2 = 0.0;  // for order
        for (long i = 0; i < nf; ++i) {
            const AmbientPoint p = gen.next_away_from_axes(cfg.sigma_margin);
            const double s = point_scale(p);
            const ComplexGradient2 cg = phi_gradient(m, p);
            const ComplexGradient2 fg =
                fd_complex_derivative(phi_field, p, cfg.h_first * s);
            const double gscale =
                std::max(std::abs(fg.d1), std::abs(fg.d2)) + 1e-300;
            worst_g = std::max(worst_g, std::max(std::abs(cg.d1 - fg.d1),
                                                 std::abs(cg.d2 - fg.d2)) /
                                            gscale);

            const Hermitian2 ch = phi_hessian(m, p, cfg.hessian_variant);
            const Hermitian2 fh = fd_complex_hessian(phi_field, p, 3e-4 * s);
            const double hscale = fh.frobenius() + 1e-300;
            worst_h = std::max(worst_h, (ch - fh).frobenius() / hscale);

            // order measurement at h and h/2 (truncation-dominated range)
            const auto grad_err = [&](double h) {
                const ComplexGradient2 f = fd_complex_derivative(phi_field, p, h * s);
                return std::max(std::abs(cg.d1 - f.d1), std::abs(cg.d2 - f.d2)) /
                       gscale;
            };
            const auto hess_err = [&](double h) {
                const Hermitian2 f = fd_complex_hessian(phi_field, p, h * s);
                return (ch - f).frobenius() / hscale;
            };
            g_h1 = std::max(g_h1, grad_err(2e-3));
            g_h2 = std::max(g_h2, grad_err(1e-3));
            h_h1 = std::max(h_h1, hess_err(2e-3));
            h_h2 = std::max(h_h2, hess_err(1e-3));
        }
        out.push_back(make_report("gradient-fd", nf, worst_g, 1e-6));
        out.push_back(make_report("hessian-fd", nf, worst_h, 1e-6,
                                  cfg.hessian_variant == HessianVariant::corrected
                                      ? "corrected variant"
                                      : "printed variant (control)"));
        const double g_order = std::log2(g_h1 / g_h2);
        const double h_order = std::log2(h_h1 / h_h2);
        out.push_back(make_report("gradient-fd-order", nf,
                                  std::max(0.0, 1.8 - g_order), 0.0,
                                  "observed order = " + std::to_string(g_order)));
        out.push_back(make_report("hessian-fd-order", nf,
                                  std::max(0.0, 1.8 - h_order), 0.0,
                                  "observed order = " + std::to_string(h_order)));
    }

    // --- the printed Hessian variant must fail the round-case oracle ---
    {
        const HopfModuli round = make_moduli(2.0, 2.0);
        PointSampler gen(round, cfg.seed + 5);
        const ScalarField round_phi = [&](const AmbientPoint& q) {
            return complexd{solve_phi(round, q), 0.0};
        };
        double min_disc = 1e300;
        for (long i = 0; i < 16; ++i) {
            const AmbientPoint p = gen.next_away_from_axes(cfg.sigma_margin);
            const Hermitian2 printed =
                phi_hessian(round, p, HessianVariant::printed);
            const Hermitian2 fh =
                fd_complex_hessian(round_phi, p, 3e-4 * point_scale(p));
            min_disc = std::min(min_disc,
                                (printed - fh).frobenius() / fh.frobenius());
        }
        const double shortfall = std::max(0.0, 0.1 - min_disc);
        out.push_back(make_report(
            "hessian-printed-discrepancy", 16, shortfall, 0.0,
            "round-case discrepancy = " + std::to_string(min_disc) +
                " (Theta-shaped, must exceed 0.1)"));
    }

    // --- theta closed: symmetric mixed first derivatives of log Phi ---
    {
        PointSampler gen(m, cfg.seed + 6);
        double worst = 0.0;
        for (long i = 0; i < nf; ++i) {
            const AmbientPoint p = gen.next_away_from_axes(cfg.sigma_margin);
            const double s = point_scale(p);
            const double phi = solve_phi(m, p);
            const ComplexGradient2 grad = phi_gradient(m, p);
            const ScalarField th1 = [&](const AmbientPoint& q) {
                return phi_gradient(m, q).d1 / solve_phi(m, q);
            };
            const ScalarField th2 = [&](const AmbientPoint& q) {
                return phi_gradient(m, q).d2 / solve_phi(m, q);
            };
            const complexd d1t2 = fd_complex_derivative(th2, p, cfg.h_first * s).d1;
            const complexd d2t1 = fd_complex_derivative(th1, p, cfg.h_first * s).d2;
            const double scale =
                (std::abs(grad.d1) + std::abs(grad.d2)) / phi / s + 1e-300;
            worst = std::max(worst, std::abs(d1t2 - d2t1) / scale);
        }
        out.push_back(make_report("theta-closed", nf, worst, 1e-6));
    }

    // --- Gauduchon and LCK ---
    out.push_back(verify_gauduchon(m, nf, cfg.seed + 7, cfg.h_fourth_rel));
    out.push_back(verify_gauduchon_control(cfg.h_fourth_rel));
    out.push_back(verify_lck(m, nf, cfg.seed + 8, cfg.h_first));

    return out;
}

}  // namespace hopf
