#pragma once

#include <vector>

#include "meanx/polar.hpp"
#include "meanx/types.hpp"

namespace meanx {

/// A jointly witnessed eigenvalue: Tx ≈ λx and T*x ≈ conj(λ)x for the same
/// unit vector x.
struct JointSpectrumPoint {
  Complex lambda;
  CVector witness;
  double residual_t = 0.0;      // ||T x - λ x||
  double residual_tstar = 0.0;  // ||T* x - conj(λ) x||
};

/// Diagnostics from xia_witness_check: the four defect norms for
/// (|T|, |T*|, V, V*) acting on the witness.
struct XiaWitness {
  bool holds = false;
  double modulus_defect = 0.0;        // || |T| x - |λ| x ||
  double adjoint_modulus_defect = 0.0;  // || |T*| x - |λ| x ||
  double isometry_defect = 0.0;       // || V x - e^{iθ} x ||
  double adjoint_isometry_defect = 0.0;  // || V* x - e^{-iθ} x ||
};

struct AjMatch {
  Complex lambda;  // point of the source spectrum
  Complex mu;      // matched point of the target spectrum (if matched)
  bool matched = false;
  double distance = 0.0;
};

struct AjInclusionReport {
  std::vector<JointSpectrumPoint> points_t;
  std::vector<JointSpectrumPoint> points_mean;
  std::vector<AjMatch> matches;
  bool holds = true;  // every point of σ_aj(T) matched in σ_aj(M(T))
};

/// All eigenvalues, sorted lexicographically by (re, im).
std::vector<Complex> eigenvalues(const CMatrix& t);

/// Exact finite-dimensional joint point spectrum: distinct eigenvalues λ
/// (deduplicated with cluster radius sqrt(atol)*scale) accepted when the
/// smallest singular value of the stacked [T - λI; T* - conj(λ)I] is at most
/// atol*scale, with the minimizing right-singular vector as witness.
std::vector<JointSpectrumPoint> joint_point_spectrum(
    const CMatrix& t, const ToleranceContext& tol = {});

/// For λ ≠ 0 in the joint point spectrum with witness x, checks the polar
/// consequences |T|x = |λ|x, |T*|x = |λ|x, Vx = e^{iθ}x, V*x = e^{-iθ}x at
/// tolerance sqrt(atol)*scale. Throws ZeroLambdaError when |λ| <= atol*scale.
XiaWitness xia_witness_check(const CMatrix& t, const JointSpectrumPoint& point,
                             const ToleranceContext& tol = {});

/// σ_aj(T) ⊆ σ_aj(M(T)), matched pointwise at distance sqrt(atol)*scale.
AjInclusionReport check_aj_inclusion(const CMatrix& t,
                                     const ToleranceContext& tol = {});

}  // namespace meanx
