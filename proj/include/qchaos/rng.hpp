#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qchaos {

// Seeded random stream. All distributions are built from raw mt19937_64
// output with the fixed transforms below, so a (seed, draw sequence) pair
// reproduces bit-identically on any conforming implementation:
//   uniform01(): one engine draw, (x >> 11) * 2^-53 in [0, 1)
//   uniform(lo, hi): one draw, lo + (hi-lo) * uniform01()
//   normal(): exactly two draws, Box-Muller sqrt(-2 ln(1-u1)) * cos(2 pi u2)
// Consumers document their draw order next to each builder.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    double normal() {
        const double u1 = 1.0 - uniform01(); // (0, 1], keeps log finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent member streams from one
// experiment seed: member i gets RngStream(derive_seed(seed, i)).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 1));
}

constexpr const char* kGeneratorFamily = "mt19937_64+splitmix64";

} // namespace qchaos
