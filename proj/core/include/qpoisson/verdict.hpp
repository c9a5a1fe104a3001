#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpoisson/tensor.hpp"

namespace qpoisson {

/// Outcome of an exact check. On failure it carries the first failing
/// witness: the basis index tuple and the nonzero residual found there.
struct Verdict {
  bool pass = true;
  std::vector<std::size_t> witness;
  std::optional<Tensor> residual;
  std::string detail;

  static Verdict ok() { return {}; }
  static Verdict fail(std::vector<std::size_t> witness, Tensor residual, std::string detail) {
    return {false, std::move(witness), std::move(residual), std::move(detail)};
  }
  explicit operator bool() const { return pass; }
};

}  // namespace qpoisson
