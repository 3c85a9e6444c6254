#pragma once

#include <cstdint>
#include <random>

#include "exlasso/types.hpp"

namespace exlasso::rng {

/// splitmix64 step; used to whiten seeds before handing them to mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic per-stream seed so replicate r is independent of execution
/// order (parallel and sequential runs draw the same numbers).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t s = base;
    (void)splitmix64(s);
    s ^= 0x6a09e667f3bcc909ull + stream;
    std::uint64_t out = splitmix64(s);
    return out ^ splitmix64(s);
}

inline std::mt19937_64 engine(std::uint64_t seed) {
    std::uint64_t s = seed;
    return std::mt19937_64(splitmix64(s));
}

inline Vector standard_normal(Eigen::Index n, std::mt19937_64& eng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(eng);
    return v;
}

inline Vector uniform(Eigen::Index n, double lo, double hi, std::mt19937_64& eng) {
    std::uniform_real_distribution<double> unif(lo, hi);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = unif(eng);
    return v;
}

}  // namespace exlasso::rng
