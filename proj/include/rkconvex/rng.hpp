#pragma once

#include <cstdint>
#include <random>

#include "rkconvex/linalg.hpp"

namespace rkconvex {

/// Deterministic random source. The engine (mt19937_64) is fully specified
/// by the standard; the uniform/gaussian conversions are implemented here
/// rather than with std distributions, whose output is
/// implementation-defined. This keeps reports byte-identical across
/// toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via the Marsaglia polar method.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    /// Uniform direction on the unit 3-sphere in R^4.
    Vec4 unit4() {
        for (;;) {
            Vec4 x{gaussian(), gaussian(), gaussian(), gaussian()};
            const double n = norm(x);
            if (n > 1e-12) return (1.0 / n) * x;
        }
    }

    /// Uniform direction on the unit circle.
    Vec2 unit2() {
        const double ang = uniform(0.0, 6.283185307179586476925286766559);
        return {std::cos(ang), std::sin(ang)};
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0;
};

/// Default seed used by the CLI and the test suites.
inline constexpr std::uint64_t kDefaultSeed = 0x4B45504C;

}  // namespace rkconvex
