#pragma once

#include "meanx/types.hpp"

namespace meanx {

/// Hermitian eigendecomposition, eigenvalues ascending, eigenvectors
/// orthonormal columns.
struct HermEig {
  RVector values;
  CMatrix vectors;
};

enum class LoewnerOrder { GE, LE, EQ, INCOMPARABLE };

CMatrix adjoint(const CMatrix& a);

/// Commutator a*b - b*a.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

double frobenius_norm(const CMatrix& a);

/// Throws NotHermitianError unless ||a - a*|| <= rtol * scale(a).
/// Decomposes the Hermitian symmetrization (a + a*)/2, so tiny skew parts
/// are projected away rather than amplified.
HermEig herm_eig(const CMatrix& a, const ToleranceContext& tol = {});

/// PSD square root. Eigenvalues in [-atol*scale, 0) are clamped to zero;
/// anything more negative throws NotPsdError.
CMatrix sqrt_psd(const CMatrix& a, const ToleranceContext& tol = {});

/// a^p for p in (0, 1], same clamping as sqrt_psd.
CMatrix frac_power_psd(const CMatrix& a, double p,
                       const ToleranceContext& tol = {});

/// Matrix logarithm of a positive definite input; throws NotPdError if any
/// eigenvalue is <= atol*scale.
CMatrix log_pd(const CMatrix& a, const ToleranceContext& tol = {});

/// Loewner comparison of Hermitian a, b. The difference is Hermitian-
/// symmetrized before its spectrum is tested against +-atol*scale, where
/// scale = max(1, ||a||, ||b||).
LoewnerOrder loewner_compare(const CMatrix& a, const CMatrix& b,
                             const ToleranceContext& tol = {});

/// Orthogonal projection onto the numerical column space of a (singular
/// values above the rank cutoff).
CMatrix projection_onto_range(const CMatrix& a,
                              const ToleranceContext& tol = {});

/// Orthogonal projection onto the numerical null space of a.
CMatrix projection_onto_kernel(const CMatrix& a,
                               const ToleranceContext& tol = {});

/// Numerical rank: #{sigma_i > dim * rank_factor * sigma_max}.
Index numerical_rank(const CMatrix& a, const ToleranceContext& tol = {});

}  // namespace meanx
