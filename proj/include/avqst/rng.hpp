#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace avqst {

// SplitMix64 finalizer. Used for all seed derivation so that parallel schedules
// and re-runs see identical substreams.
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Child seed for substream `stream` of `base`:  mix64(base + (stream+1)*GG).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base + kGoldenGamma * (stream + 1));
}

/*
 * Deterministic random stream. The engine (mt19937_64) and every transform on
 * top of it are fully specified, so a seed reproduces the same sequence on any
 * platform. Single-owner: never share one stream across workers; derive child
 * streams with derive() instead.
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Marsaglia's polar method; the spare deviate is cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Complex deviate with independent N(0,1) real and imaginary parts.
    std::complex<double> next_complex_gaussian() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re, im};
    }

    RngStream derive(std::uint64_t stream) const {
        return RngStream(derive_seed(seed_, stream));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace avqst
