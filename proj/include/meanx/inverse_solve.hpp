#pragma once

#include <functional>
#include <string>

#include "meanx/types.hpp"

namespace meanx {

/// Target T = x (x) y, the rank-one map h -> <h, y> x (inner product
/// conjugate-linear in its second slot, so the matrix is x * y^*).
struct RankOneSpec {
  CVector x;
  CVector y;
};

/// Target T = delta * x x^* + nu * y y^* with {x, y} orthonormal and both
/// coefficients nonzero.
struct RankTwoNormalSpec {
  Complex delta;
  Complex nu;
  CVector x;
  CVector y;
};

/// A preimage of T under the mean transform. UNIQUE and FIXED_POINT carry
/// the solution directly; FAMILY carries an evaluator over the admissible
/// disk |beta|^2 <= |delta * nu| (the preimage property holds on the open
/// disk; on the boundary the emitted member has singular modulus and is
/// degenerate).
struct MeanPreimage {
  enum class Kind { UNIQUE, FAMILY, FIXED_POINT };
  Kind kind = Kind::UNIQUE;
  CMatrix solution;  // for FAMILY: the beta = 0 member
  std::function<CMatrix(Complex)> family_evaluator;  // FAMILY only
  double admissible_radius_sq = 0.0;                 // FAMILY only: |delta*nu|
  std::string warning;  // e.g. phase configuration close to the case split
};

/// Solve M(X) = x (x) y: X = z (x) y with
/// z = 2x - (<x,y>/||y||^2) y. Throws ZeroVectorError on zero x or y.
MeanPreimage solve_rank_one(const RankOneSpec& spec,
                            const ToleranceContext& tol = {});

/// Solve M(X) = delta P + nu Q for the rank-two normal target. Case split on
/// the polar phases theta = arg(delta), phi = arg(nu):
///   e^{i theta} != -e^{i phi}  ->  UNIQUE with X = T;
///   e^{i theta} == -e^{i phi}  ->  FAMILY X(beta), in the {x, y} frame
///       e^{i theta} [[|delta|, conj(beta)], [-beta, -|nu|]],
/// extended by zero on the orthogonal complement.
MeanPreimage solve_rank_two_normal(const RankTwoNormalSpec& spec,
                                   const ToleranceContext& tol = {});

/// T^2 = 0: X = 2T (unique within the square-zero class).
MeanPreimage solve_square_zero(const CMatrix& t,
                               const ToleranceContext& tol = {});

/// T positive semidefinite: the transform fixes T, so X = T.
MeanPreimage solve_positive(const CMatrix& t, const ToleranceContext& tol = {});

}  // namespace meanx
