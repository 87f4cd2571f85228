#pragma once

#include <cstdint>

namespace wiretap {

// splitmix64 finalizer; the basis of all randomness in this library.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: draw(i) depends only on (key, i), so any draw can
// be computed out of order and parallel runs agree with serial ones.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(mix64(key)) {}

  std::uint64_t draw(std::uint64_t counter) const {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * counter);
  }

  // uniform in [0,1) with 53 random bits
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(draw(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
};

// Per-trial seed derivation: trial t of stream s under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t counter = 0) {
  return mix64(mix64(master ^ mix64(stream)) + 0x9e3779b97f4a7c15ULL * counter);
}

// Sequential convenience wrapper around CounterRng.
class SequentialRng {
 public:
  explicit SequentialRng(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next_u64() { return rng_.draw(counter_++); }
  double next_uniform() { return rng_.uniform(counter_++); }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace wiretap
