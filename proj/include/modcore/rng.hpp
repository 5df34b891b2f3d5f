#ifndef MODCORE_RNG_HPP
#define MODCORE_RNG_HPP

#include <cstdint>

namespace modcore {

// splitmix64.  Self-contained so that seeded runs are reproducible across
// platforms and standard-library versions (std::uniform_int_distribution is
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased value in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Hands out consecutive seeds: each randomized step takes the next one, so a
// discarded attempt advances the chain by exactly one and reruns are
// reproducible from the master seed alone.
class SeedChain {
 public:
  explicit SeedChain(std::uint64_t start) : next_(start) {}
  std::uint64_t take() { return next_++; }
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_;
};

}  // namespace modcore

#endif
