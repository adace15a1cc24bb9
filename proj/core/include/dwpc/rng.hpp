#ifndef DWPC_RNG_HPP
#define DWPC_RNG_HPP

#include <cstdint>
#include <string_view>

namespace dwpc {

/// splitmix64: tiny, portable, and bit-stable across platforms, which keeps
/// reports byte-identical for a given seed regardless of toolchain.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

/// Deterministic sub-stream derivation: FNV-1a over tags, mixed into the seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    Rng mix(seed ^ h);
    return mix.next();
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view a, std::string_view b,
                                 std::uint64_t k = 0) {
    return derive_seed(derive_seed(derive_seed(seed, a), b) + k, "leaf");
}

}  // namespace dwpc

#endif
