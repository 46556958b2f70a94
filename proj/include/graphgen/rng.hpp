#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace graphgen {

// All randomness in the library flows through this wrapper so that a seed
// pins down the exact draw sequence on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Unbiased draw from [0, bound) using multiply-shift rejection.
  // Consumes one 64-bit word in the common case.
  uint64_t below(uint64_t bound) {
    unsigned __int128 prod = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<uint64_t>(prod);
    if (lo < bound) {
      const uint64_t cutoff = (0 - bound) % bound;
      while (lo < cutoff) {
        prod = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<uint64_t>(prod);
      }
    }
    return static_cast<uint64_t>(prod >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Fisher-Yates; consumes exactly size-1 draws (for size >= 2).
  template <typename T>
  void shuffle(T* data, size_t size) {
    for (size_t i = size; i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(data[i - 1], data[j]);
    }
  }

  // splitmix64 finalizer, used to derive independent stream seeds.
  static uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  static uint64_t hash_combine(uint64_t h, uint64_t v) { return mix(h ^ mix(v)); }

  // FNV-1a, for folding names into seed derivations.
  static uint64_t hash_str(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace graphgen
