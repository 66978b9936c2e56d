#pragma once

#include <cstdint>

namespace shinglesim {

/// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for repetition `index` of stream `tag` under a user seed.
/// Distinct (tag, index) pairs give unrelated generator states.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(tag ^ mix64(index)));
}

namespace seed_tag {
inline constexpr std::uint64_t kRum = 0x52554d;           // "RUM"
inline constexpr std::uint64_t kSubsampleA = 0x47432d41;  // "GC-A"
inline constexpr std::uint64_t kSubsampleB = 0x47432d42;  // "GC-B"
inline constexpr std::uint64_t kMonteCarlo = 0x4d43;      // "MC"
}  // namespace seed_tag

}  // namespace shinglesim
