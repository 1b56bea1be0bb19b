#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mlaf {

/// Seeded generator with named substreams. Uniform and normal variates are
/// derived from raw 64-bit output so sequences do not depend on the
/// standard library's distribution implementations.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), engine_(mix(seed, stream)) {}

    /// Independent child stream.
    StreamRng split(std::uint64_t stream) const { return StreamRng(seed_, stream); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        // Box-Muller; u1 in (0, 1].
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        return splitmix(splitmix(seed) ^ (stream * 0xd1b54a32d192ed03ULL));
    }
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace mlaf
