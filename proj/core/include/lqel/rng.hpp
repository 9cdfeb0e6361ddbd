#pragma once

#include <cstdint>
#include <random>

#include "lqel/matrix.hpp"

namespace lqel {

// Deterministic sampler. std::uniform_int_distribution is implementation
// defined, so bounded draws are derived from the raw mt19937_64 stream
// directly: identical seeds give identical runs on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  long int_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  Scalar small_int_scalar(long lo, long hi) { return Scalar(int_in(lo, hi)); }

  Vec int_vector(std::size_t n, long lo, long hi) {
    Vec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = Scalar(int_in(lo, hi));
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lqel
