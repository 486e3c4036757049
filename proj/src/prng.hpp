#pragma once

#include <cstdint>

namespace pfd {

// Portable deterministic 64-bit generator (splitmix64). The recurrence is
// fixed by these constants, so a seed produces the same stream on every
// platform and in every language that reimplements it; generated instances
// are bit-identical across runs.
class splitmix64 {
public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be positive. Plain modulo: the tiny
  // bias is irrelevant for instance generation and keeps the mapping
  // trivial to reproduce elsewhere.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

}  // namespace pfd
