#pragma once

#include <cstdint>
#include <random>

#include "qpoisson/matrix.hpp"
#include "qpoisson/tensor.hpp"

namespace qpoisson {

/// Seeded generator for the randomized property suites. Entries are drawn
/// from {-3..3} / {1, 2}.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  Vec vector(std::size_t n);
  /// Antisymmetric 2-tensor with independent entries above the diagonal.
  Tensor bivector(std::size_t n);
  /// Arbitrary (not antisymmetric) tensor.
  Tensor tensor(std::size_t n, std::size_t degree);
  std::size_t index(std::size_t bound);

private:
  std::mt19937_64 rng_;
};

}  // namespace qpoisson
