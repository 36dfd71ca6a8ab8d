#pragma once

#include <cstdint>
#include <cmath>

#include "ldhull/vec.hpp"

namespace ldhull {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Per-trial seed derivation: parallel workers own disjoint streams keyed by
/// (master seed, trial index), independent of worker count.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL + index * 0xd1b54a32d192ed03ULL);
    splitmix64(s);
    return splitmix64(s);
}

/// xoshiro256++ with an explicitly specified sampling algorithm for every
/// variate, so that streams are reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Marsaglia's polar method (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, q;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            q = u * u + v * v;
        } while (q >= 1.0 || q == 0.0);
        const double f = std::sqrt(-2.0 * std::log(q) / q);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    Vec2 normal2() {
        const double a = normal();
        const double b = normal();
        return {a, b};
    }

    /// Von Mises angle with mean 0 and concentration kappa (Best-Fisher).
    double von_mises(double kappa) {
        if (kappa < 1e-10) return uniform(-M_PI, M_PI);
        const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
        const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
        const double r = (1.0 + rho * rho) / (2.0 * rho);
        for (;;) {
            const double z = std::cos(M_PI * uniform());
            const double f = (1.0 + r * z) / (r + z);
            const double c = kappa * (r - f);
            const double u = uniform();
            if (c * (2.0 - c) - u > 0.0 || std::log(c / u) + 1.0 - c >= 0.0) {
                const double sign = uniform() < 0.5 ? -1.0 : 1.0;
                return sign * std::acos(f);
            }
        }
    }

    /// Index into a cumulative-probability table (cum.back() == 1).
    std::size_t categorical(const double* cum, std::size_t n) {
        const double u = uniform();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (u < cum[i]) return i;
        }
        return n - 1;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ldhull
