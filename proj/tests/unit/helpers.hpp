#pragma once

#include <doctest.h>

#include "meanx/generators.hpp"
#include "meanx/matrix_core.hpp"

namespace meanx::test {

inline double max_abs(const CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

inline double max_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline CMatrix gen(GenKind kind, Index dim, std::uint64_t seed) {
  GenSpec spec;
  spec.kind = kind;
  spec.dim = dim;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace meanx::test
