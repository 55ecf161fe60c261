#pragma once

#include <cstdint>
#include <vector>

namespace starcol {

// Splittable counter-based generator (splitmix64 core). Every randomised
// operation takes an explicit seed and derives independent child streams via
// split(), so results depend only on (input, seed) and never on call order.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound). bound must be positive.
  uint64_t below(uint64_t bound) {
    // multiply-shift; the tiny modulo bias is irrelevant here but cheap to
    // avoid with 128-bit multiply
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next()) * bound) >> 64);
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  bool coin() { return (next() & 1) != 0; }

  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace starcol
