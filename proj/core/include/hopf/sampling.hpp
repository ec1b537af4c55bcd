#pragma once

#include <cstdint>
#include <random>

#include "hopf/geometry.hpp"

namespace hopf {

/// Deterministic point sampler. mt19937_64 output is pinned by the standard;
/// uniform doubles are derived from it directly ((x >> 11) * 2^-53) instead of
/// going through the implementation-defined distributions, so streams are
/// identical everywhere.
class PointSampler {
  public:
    PointSampler(const HopfModuli& m, std::uint64_t seed) : m_(m), rng_(seed) {}

    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// log|z_i| uniform in [-1, 1 + L], phases uniform in [0, 2 pi).
    AmbientPoint next() {
        const double x1 = uniform(-1.0, 1.0 + m_.period_L);
        const double x2 = uniform(-1.0, 1.0 + m_.period_L);
        const double t1 = uniform(0.0, 2.0 * pi);
        const double t2 = uniform(0.0, 2.0 * pi);
        return AmbientPoint{std::exp(x1) * complexd{std::cos(t1), std::sin(t1)},
                            std::exp(x2) * complexd{std::cos(t2), std::sin(t2)}};
    }

    /// Rejects points with min(sigma, 1 - sigma) below the margin; FD step
    /// selection degrades near the axes, which are covered instead by
    /// closed-form endpoint evaluations.
    AmbientPoint next_away_from_axes(double sigma_margin) {
        for (int i = 0; i < 1000; ++i) {
            AmbientPoint p = next();
            const double sigma = reduced_from_ambient(m_, p).sigma;
            if (sigma > sigma_margin && 1.0 - sigma > sigma_margin) return p;
        }
        throw std::runtime_error("PointSampler: rejection budget exhausted");
    }

    static constexpr double pi = 3.14159265358979323846;

  private:
    HopfModuli m_;
    std::mt19937_64 rng_;
};

}  // namespace hopf
