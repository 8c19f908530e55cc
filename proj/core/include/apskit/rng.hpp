#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace apskit {

/// splitmix64 step; used to expand and mix seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive a stream seed from a master seed and a tag tuple. Pure function of
/// its inputs, so every worker gets the same stream regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::int64_t> tags) {
    std::uint64_t s = master;
    std::uint64_t out = splitmix64(s);
    for (std::int64_t t : tags) {
        s ^= static_cast<std::uint64_t>(t) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        out = splitmix64(s);
    }
    return out;
}

/// Seeded generator for Monte Carlo draws. mt19937_64 output is fixed by the
/// standard, so streams are reproducible across builds given the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform index in [0, n). Modulo bias is below 2^-53 for n <= 2^11
    /// and irrelevant at the constellation sizes used here.
    std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
    }

    /// Circularly symmetric complex Gaussian CN(0, 1): |z|^2 ~ Exp(1),
    /// phase uniform.
    std::complex<double> next_cn01() {
        double u = next_unit();
        // guard the open end of the interval before taking the log
        double radius = std::sqrt(-std::log1p(-u));
        double phase = 6.283185307179586476925286766559 * next_unit();
        return {radius * std::cos(phase), radius * std::sin(phase)};
    }

private:
    std::mt19937_64 engine_;
};

} // namespace apskit
