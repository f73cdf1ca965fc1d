#pragma once

#include <cstdint>

namespace dpc {

// SplitMix64 (Steele/Lea/Flood). Tiny, seedable and platform-stable;
// every random choice in the library flows through one of these so runs
// reproduce exactly from a single seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Modulo reduction; the bounds used here are tiny (at most a few
  // hundred), so the bias is far below anything observable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace dpc
