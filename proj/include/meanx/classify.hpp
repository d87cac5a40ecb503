#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meanx/matrix_core.hpp"
#include "meanx/types.hpp"

namespace meanx {

/// Outcome of one class predicate. The defining relation is
/// holds == (residual <= threshold) for every predicate.
struct Verdict {
  bool holds = false;
  double residual = 0.0;
  double threshold = 0.0;
  /// For failed comparisons with a natural witness: the offending eigenvalue
  /// (most-violating direction) and its eigenvector.
  std::optional<Complex> witness_value;
  std::optional<CVector> witness_vector;
};

struct ClassificationEntry {
  std::string name;
  std::optional<Verdict> verdict;  // empty when skipped
  std::string skip_reason;         // non-empty only when skipped
};

struct ClassificationReport {
  std::vector<ClassificationEntry> entries;
  const ClassificationEntry* find(const std::string& name) const;
};

// Residuals are Frobenius norms of defect matrices; order predicates use the
// most-negative eigenvalue of the Hermitian-symmetrized difference. Each
// threshold is atol times the natural power of scale(T) for the quantity
// compared, which keeps verdicts stable under T -> c*T for the
// scale-invariant classes.

Verdict is_self_adjoint(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_normal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_quasinormal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_binormal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_p_hyponormal(const CMatrix& t, double p,
                        const ToleranceContext& tol = {});
Verdict is_hyponormal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_semi_hyponormal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_co_hyponormal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_semi_co_hyponormal(const CMatrix& t,
                              const ToleranceContext& tol = {});
/// Requires T invertible; throws SingularInputError when the smallest
/// singular value sits at or below the rank cutoff (or the products are not
/// numerically positive definite).
Verdict is_log_hyponormal(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_unitary(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_positive(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_partial_isometry(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_square_zero(const CMatrix& t, const ToleranceContext& tol = {});
Verdict is_invertible(const CMatrix& t, const ToleranceContext& tol = {});

/// Runs every predicate; log_hyponormal degrades to a skipped entry with
/// reason "singular" instead of throwing.
ClassificationReport classify_all(const CMatrix& t,
                                  const ToleranceContext& tol = {});

}  // namespace meanx
