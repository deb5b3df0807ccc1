#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mcran::detail {

// mt19937_64 output is fixed by the standard; the transforms below are
// spelled out so draws are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Box-Muller, cosine branch; consumes two uniforms.
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Exp(1); consumes one uniform.
    double exponential() { return -std::log(1.0 - uniform()); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace mcran::detail
