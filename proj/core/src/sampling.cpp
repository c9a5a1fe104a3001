#include "qpoisson/sampling.hpp"

namespace qpoisson {

Rational Sampler::rational() {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  const long p = num(rng_);
  return Rational(p, den(rng_));
}

Vec Sampler::vector(std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rational();
  return v;
}

Tensor Sampler::bivector(std::size_t n) {
  Tensor r(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational c = rational();
      r.at({i, j}) = c;
      r.at({j, i}) = -c;
    }
  return r.mark_antisymmetric();
}

Tensor Sampler::tensor(std::size_t n, std::size_t degree) {
  Tensor t(n, degree);
  for (std::size_t f = 0; f < t.size(); ++f) t.flat(f) = rational();
  return t;
}

std::size_t Sampler::index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> d(0, bound - 1);
  return d(rng_);
}

}  // namespace qpoisson
