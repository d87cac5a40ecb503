#include "meanx/inverse_solve.hpp"

#include <cmath>

#include "meanx/classify.hpp"

namespace meanx {

namespace {

constexpr double kCaseSplitWarnBand = 1e-4;

}  // namespace

MeanPreimage solve_rank_one(const RankOneSpec& spec,
                            const ToleranceContext& tol) {
  (void)tol;
  if (spec.x.norm() == 0.0 || spec.y.norm() == 0.0) {
    throw ZeroVectorError("solve_rank_one: x and y must be nonzero");
  }
  if (spec.x.size() != spec.y.size()) {
    throw InvalidSpecError("solve_rank_one: x and y must share a dimension");
  }
  const Complex xy = spec.y.adjoint() * spec.x;  // <x, y>
  const double ynorm2 = spec.y.squaredNorm();
  CVector z = 2.0 * spec.x - (xy / ynorm2) * spec.y;
  MeanPreimage out;
  out.kind = MeanPreimage::Kind::UNIQUE;
  out.solution = z * spec.y.adjoint();
  return out;
}

MeanPreimage solve_rank_two_normal(const RankTwoNormalSpec& spec,
                                   const ToleranceContext& tol) {
  const double dmod = std::abs(spec.delta);
  const double nmod = std::abs(spec.nu);
  if (dmod == 0.0 || nmod == 0.0) {
    throw DegenerateSpecError(
        "solve_rank_two_normal: delta and nu must be nonzero");
  }
  if (spec.x.size() != spec.y.size()) {
    throw DegenerateSpecError(
        "solve_rank_two_normal: x and y must share a dimension");
  }
  const double unit = 1e-8;
  if (std::abs(spec.x.norm() - 1.0) > unit ||
      std::abs(spec.y.norm() - 1.0) > unit ||
      std::abs(Complex(spec.y.adjoint() * spec.x)) > unit) {
    throw DegenerateSpecError(
        "solve_rank_two_normal: {x, y} must be orthonormal");
  }

  const Complex phase_d = spec.delta / dmod;  // e^{i theta}
  const Complex phase_n = spec.nu / nmod;     // e^{i phi}
  const CMatrix target = spec.delta * spec.x * spec.x.adjoint() +
                         spec.nu * spec.y * spec.y.adjoint();

  const double split = std::abs(phase_d + phase_n);
  MeanPreimage out;
  if (split <= std::sqrt(tol.atol)) {
    // Opposite phases: one-parameter family over the admissibility disk.
    const double radius_sq = dmod * nmod;
    const CVector x = spec.x;
    const CVector y = spec.y;
    out.kind = MeanPreimage::Kind::FAMILY;
    out.admissible_radius_sq = radius_sq;
    out.family_evaluator = [phase_d, dmod, nmod, radius_sq, x,
                            y](Complex beta) -> CMatrix {
      if (std::norm(beta) > radius_sq * (1.0 + 1e-12)) {
        throw InvalidSpecError(
            "rank-two family: |beta|^2 exceeds the admissible disk");
      }
      return phase_d * (dmod * x * x.adjoint() + std::conj(beta) * x * y.adjoint() -
                        beta * y * x.adjoint() - nmod * y * y.adjoint());
    };
    out.solution = out.family_evaluator(Complex(0.0, 0.0));
    return out;
  }

  out.kind = MeanPreimage::Kind::UNIQUE;
  out.solution = target;
  if (split <= kCaseSplitWarnBand) {
    out.warning =
        "phase sum |e^{i theta} + e^{i phi}| = " + std::to_string(split) +
        " is close to the case split; the unique solution is "
        "ill-conditioned here";
  }
  return out;
}

MeanPreimage solve_square_zero(const CMatrix& t, const ToleranceContext& tol) {
  if (!is_square_zero(t, tol).holds) {
    throw NotSquareZeroError("solve_square_zero: T^2 != 0");
  }
  MeanPreimage out;
  out.kind = MeanPreimage::Kind::UNIQUE;
  out.solution = 2.0 * t;
  return out;
}

MeanPreimage solve_positive(const CMatrix& t, const ToleranceContext& tol) {
  if (!is_positive(t, tol).holds) {
    throw NotPositiveError("solve_positive: T is not positive semidefinite");
  }
  MeanPreimage out;
  out.kind = MeanPreimage::Kind::FIXED_POINT;
  out.solution = t;
  return out;
}

}  // namespace meanx
