#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace fdsic {

/// Deterministic random stream. Every consumer derives its own stream from
/// (master seed, stream id, salt), so results do not depend on evaluation
/// order or thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

    /// Independent stream for one unit of work (e.g. one Monte Carlo packet).
    static Rng derive(std::uint64_t master_seed, std::uint64_t stream_id, std::uint64_t salt) {
        std::uint64_t s = mix(master_seed);
        s = mix(s ^ (0x9e3779b97f4a7c15ULL + stream_id));
        s = mix(s ^ (0xbf58476d1ce4e5b9ULL + salt));
        return Rng(s);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (pairs cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly-symmetric complex Gaussian with unit variance,
    /// E|z|^2 = 1 (variance 1/2 per real dimension).
    std::complex<double> cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * 0.70710678118654752440, im * 0.70710678118654752440};
    }

private:
    // splitmix64 finalizer; decorrelates nearby seeds before feeding mt19937_64.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace fdsic
