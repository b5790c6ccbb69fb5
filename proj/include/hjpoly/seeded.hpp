#pragma once

// The single source of randomness in the library. Every randomized stage
// derives an independent substream from (seed, stage tag, attempt) so that
// runs are reproducible and retries draw fresh values deterministically.

#include <cstdint>

namespace hjpoly {

// Stage tags for substream derivation.
inline constexpr std::uint64_t kTagDrawingJitter = 1;
inline constexpr std::uint64_t kTagSnapJitter = 2;
inline constexpr std::uint64_t kTagLift = 3;

class SeedStream {
public:
    SeedStream(std::uint64_t seed, std::uint64_t tag, std::uint64_t attempt = 0)
        : state_(mix(seed + kGamma * (tag + 1)) ^ mix(attempt + 0xd1b54a32d192ed03ULL)) {}

    // splitmix64 step
    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }
    std::uint64_t state_;
};

}  // namespace hjpoly
