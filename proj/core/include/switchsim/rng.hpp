#pragma once

#include <cstdint>

namespace switchsim {

// splitmix64 finalizer (Steele, Lea & Flood). Used as a stateless counter
// generator: each (seed, stream, counter) triple yields an independent
// deviate, so sample streams can be partitioned across workers freely
// without changing any draw.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double counter_u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t h = splitmix64(splitmix64(seed ^ splitmix64(stream)) + counter);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline constexpr const char* kRngAlgorithm = "splitmix64";

}  // namespace switchsim
