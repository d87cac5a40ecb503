#pragma once

#include "meanx/matrix_core.hpp"
#include "meanx/types.hpp"

namespace meanx {

/// T = V * P with P = (T*T)^{1/2} PSD and V the partial isometry whose
/// kernel equals Ker(T). V is built from the singular triples above the rank
/// cutoff only — it is never completed to a unitary, so V*V is the
/// projection onto the numerical range of P, not the identity.
struct PolarParts {
  CMatrix V;
  CMatrix P;
  Index rank = 0;
  ToleranceContext tol_used;
  /// Diagnostics for rank decisions: the cutoff used and the ratio of the
  /// smallest kept singular value to it (+inf when nothing is kept). A gap
  /// near 1 flags an ambiguous rank cut.
  double cutoff = 0.0;
  double gap = 0.0;
};

/// How the numerical null spaces of T and T* relate.
enum class KernelRelation { EQUAL, KER_T_IN_KER_TSTAR, KER_TSTAR_IN_KER_T, NONE };

PolarParts polar_decompose(const CMatrix& t, const ToleranceContext& tol = {});

/// |T*| computed from the parts of T as V P V*.
CMatrix abs_adjoint(const PolarParts& parts);

/// Containment of kernels tested via projector norms:
/// Ker(A) ⊆ Ker(B) iff ||B * K_A|| <= atol * scale.
KernelRelation kernel_relation(const CMatrix& t,
                               const ToleranceContext& tol = {});

}  // namespace meanx
