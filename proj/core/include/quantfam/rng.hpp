#ifndef QUANTFAM_RNG_HPP_
#define QUANTFAM_RNG_HPP_

#include <cstdint>
#include <random>

namespace quantfam {

/// Seeded uniform stream on (0,1). Backed by the 64-bit Mersenne Twister;
/// the engine output is mapped to doubles by a fixed bit recipe so streams
/// are identical across platforms and standard library versions.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    /// Strictly interior uniform draw: ((x >> 11) + 0.5) * 2^-53.
    double next() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 step; used to derive independent per-cell seeds from a master
/// seed and cell coordinates so results do not depend on scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k1, std::uint64_t k2 = 0,
                                 std::uint64_t k3 = 0) {
    std::uint64_t s = splitmix64(master ^ 0xA5A5A5A55A5A5A5AULL);
    s = splitmix64(s ^ k1);
    s = splitmix64(s ^ k2);
    s = splitmix64(s ^ k3);
    return s;
}

}  // namespace quantfam

#endif  // QUANTFAM_RNG_HPP_
