#include "meanx/polar.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/SVD>

namespace meanx {

PolarParts polar_decompose(const CMatrix& t, const ToleranceContext& tol) {
  if (t.rows() != t.cols()) {
    throw InvalidSpecError("polar_decompose: matrix must be square");
  }
  const Index n = t.rows();
  Eigen::JacobiSVD<CMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const CMatrix& u = svd.matrixU();
  const CMatrix& w = svd.matrixV();  // T = U * diag(sigma) * W^*

  PolarParts parts;
  parts.tol_used = tol;
  parts.cutoff = n > 0 ? tol.rank_cutoff(n, sigma(0)) : 0.0;

  Index r = 0;
  for (Index i = 0; i < n; ++i)
    if (sigma(i) > parts.cutoff) ++r;
  parts.rank = r;
  parts.gap = r > 0 && parts.cutoff > 0.0
                  ? sigma(r - 1) / parts.cutoff
                  : std::numeric_limits<double>::infinity();

  // P keeps the full spectrum (it is the exact modulus up to rounding); V is
  // assembled from the kept triples only, which encodes Ker(V) = Ker(T).
  parts.P = w * sigma.asDiagonal() * w.adjoint();
  parts.V = u.leftCols(r) * w.leftCols(r).adjoint();
  return parts;
}

CMatrix abs_adjoint(const PolarParts& parts) {
  return parts.V * parts.P * parts.V.adjoint();
}

KernelRelation kernel_relation(const CMatrix& t, const ToleranceContext& tol) {
  const double threshold = tol.atol * scale_of(t);
  const CMatrix ker_t = projection_onto_kernel(t, tol);
  const CMatrix ker_tstar = projection_onto_kernel(CMatrix(t.adjoint()), tol);
  const bool t_in_tstar =
      spectral_norm(CMatrix(t.adjoint() * ker_t)) <= threshold;
  const bool tstar_in_t = spectral_norm(CMatrix(t * ker_tstar)) <= threshold;
  if (t_in_tstar && tstar_in_t) return KernelRelation::EQUAL;
  if (t_in_tstar) return KernelRelation::KER_T_IN_KER_TSTAR;
  if (tstar_in_t) return KernelRelation::KER_TSTAR_IN_KER_T;
  return KernelRelation::NONE;
}

}  // namespace meanx
