#include "meanx/transforms.hpp"

namespace meanx {

namespace {

void require_adjoint_kernel_inside(const CMatrix& t,
                                   const ToleranceContext& tol,
                                   const char* who) {
  KernelRelation rel = kernel_relation(t, tol);
  if (rel != KernelRelation::EQUAL &&
      rel != KernelRelation::KER_TSTAR_IN_KER_T) {
    throw KernelConditionError(std::string(who) +
                               ": requires Ker(T*) contained in Ker(T)");
  }
}

}  // namespace

CMatrix mean_transform(const CMatrix& t, const ToleranceContext& tol) {
  PolarParts parts = polar_decompose(t, tol);
  return 0.5 * (t + parts.P * parts.V);
}

CMatrix duggal_transform(const CMatrix& t, const ToleranceContext& tol) {
  PolarParts parts = polar_decompose(t, tol);
  return parts.P * parts.V;
}

CMatrix aluthge_transform(const CMatrix& t, const ToleranceContext& tol) {
  PolarParts parts = polar_decompose(t, tol);
  CMatrix root = sqrt_psd(parts.P, tol);
  return root * parts.V * root;
}

TransformBundle transform_bundle(const CMatrix& t,
                                 const ToleranceContext& tol) {
  TransformBundle bundle;
  bundle.parts = polar_decompose(t, tol);
  const CMatrix& v = bundle.parts.V;
  const CMatrix& p = bundle.parts.P;
  bundle.duggal = p * v;
  bundle.mean = 0.5 * (t + bundle.duggal);
  CMatrix root = sqrt_psd(p, tol);
  bundle.aluthge = root * v * root;
  return bundle;
}

PolarParts mean_polar_parts(const CMatrix& t, const ToleranceContext& tol) {
  require_adjoint_kernel_inside(t, tol, "mean_polar_parts");
  PolarParts parts = polar_decompose(t, tol);
  PolarParts mean_parts;
  mean_parts.V = parts.V;
  mean_parts.P =
      0.5 * (parts.P + parts.V.adjoint() * parts.P * parts.V);
  // Kernels of M(T) and T coincide, so the rank and cut diagnostics carry
  // over from the input's decomposition.
  mean_parts.rank = parts.rank;
  mean_parts.tol_used = parts.tol_used;
  mean_parts.cutoff = parts.cutoff;
  mean_parts.gap = parts.gap;
  return mean_parts;
}

std::pair<CMatrix, CMatrix> duggal_moduli(const CMatrix& t,
                                          const ToleranceContext& tol) {
  require_adjoint_kernel_inside(t, tol, "duggal_moduli");
  PolarParts parts = polar_decompose(t, tol);
  CMatrix modulus = parts.V.adjoint() * parts.P * parts.V;
  return {modulus, parts.P};
}

}  // namespace meanx
