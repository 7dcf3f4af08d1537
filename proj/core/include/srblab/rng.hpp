#ifndef SRBLAB_RNG_HPP
#define SRBLAB_RNG_HPP

#include <cstdint>

namespace srblab {

/// splitmix64 state mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small deterministic generator (splitmix64). Substreams are derived by
/// hashing (seed, index) so that per-orbit streams are independent of
/// worker count and scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Substream keyed by one or two indices.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix64(mix64(seed) ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }
    static Rng substream(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
        return substream(mix64(mix64(seed) ^ (0xd1b54a32d192ed03ULL * (i + 1))), j);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

private:
    std::uint64_t state_;
};

} // namespace srblab

#endif
