#include "meanx/classify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace meanx {

const ClassificationEntry* ClassificationReport::find(
    const std::string& name) const {
  for (const auto& entry : entries)
    if (entry.name == name) return &entry;
  return nullptr;
}

namespace {

Verdict defect_verdict(const CMatrix& defect, double threshold) {
  Verdict v;
  v.residual = frobenius_norm(defect);
  v.threshold = threshold;
  v.holds = v.residual <= v.threshold;
  return v;
}

// Attach the most-violating eigenpair of a Hermitian defect matrix.
void attach_hermitian_witness(Verdict& v, const CMatrix& defect) {
  if (v.holds || defect.size() == 0) return;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(
      CMatrix(0.5 * (defect + defect.adjoint())));
  Index worst = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(worst)))
      worst = i;
  v.witness_value = Complex(es.eigenvalues()(worst), 0.0);
  v.witness_vector = es.eigenvectors().col(worst);
}

// A ⪰ B (or ⪯) up to tolerance. Residual is the worst violation of the
// requested order: max(0, -lambda_min(Herm(A - B))) for GE.
Verdict order_verdict(const CMatrix& a, const CMatrix& b, bool want_ge,
                      const ToleranceContext& tol) {
  const double scale = std::max({1.0, spectral_norm(a), spectral_norm(b)});
  CMatrix diff = want_ge ? CMatrix(a - b) : CMatrix(b - a);
  diff = 0.5 * (diff + diff.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(diff);
  Verdict v;
  v.threshold = tol.atol * scale;
  const double lo = es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
  v.residual = std::max(0.0, -lo);
  v.holds = v.residual <= v.threshold;
  if (!v.holds) {
    v.witness_value = Complex(lo, 0.0);
    v.witness_vector = es.eigenvectors().col(0);
  }
  return v;
}

}  // namespace

Verdict is_self_adjoint(const CMatrix& t, const ToleranceContext& tol) {
  return defect_verdict(CMatrix(t - t.adjoint()), tol.atol * scale_of(t));
}

Verdict is_normal(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  CMatrix defect = t.adjoint() * t - t * t.adjoint();
  Verdict v = defect_verdict(defect, tol.atol * s * s);
  attach_hermitian_witness(v, defect);
  return v;
}

Verdict is_quasinormal(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  CMatrix gram = t.adjoint() * t;
  return defect_verdict(CMatrix(t * gram - gram * t), tol.atol * s * s * s);
}

Verdict is_binormal(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  CMatrix defect = commutator(t.adjoint() * t, t * t.adjoint());
  // [T*T, TT*] is quartic in T, so the threshold scales accordingly.
  return defect_verdict(defect, tol.atol * s * s * s * s);
}

Verdict is_p_hyponormal(const CMatrix& t, double p,
                        const ToleranceContext& tol) {
  CMatrix lhs = frac_power_psd(t.adjoint() * t, p, tol);
  CMatrix rhs = frac_power_psd(t * t.adjoint(), p, tol);
  return order_verdict(lhs, rhs, /*want_ge=*/true, tol);
}

Verdict is_hyponormal(const CMatrix& t, const ToleranceContext& tol) {
  return order_verdict(CMatrix(t.adjoint() * t), CMatrix(t * t.adjoint()),
                       /*want_ge=*/true, tol);
}

Verdict is_semi_hyponormal(const CMatrix& t, const ToleranceContext& tol) {
  return is_p_hyponormal(t, 0.5, tol);
}

Verdict is_co_hyponormal(const CMatrix& t, const ToleranceContext& tol) {
  return order_verdict(CMatrix(t.adjoint() * t), CMatrix(t * t.adjoint()),
                       /*want_ge=*/false, tol);
}

Verdict is_semi_co_hyponormal(const CMatrix& t, const ToleranceContext& tol) {
  CMatrix lhs = frac_power_psd(t.adjoint() * t, 0.5, tol);
  CMatrix rhs = frac_power_psd(t * t.adjoint(), 0.5, tol);
  return order_verdict(lhs, rhs, /*want_ge=*/false, tol);
}

Verdict is_log_hyponormal(const CMatrix& t, const ToleranceContext& tol) {
  Eigen::JacobiSVD<CMatrix> svd(t);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 ||
      sigma(sigma.size() - 1) <= tol.rank_cutoff(t.rows(), sigma(0))) {
    throw SingularInputError("is_log_hyponormal: input is singular");
  }
  try {
    CMatrix lhs = log_pd(CMatrix(t.adjoint() * t), tol);
    CMatrix rhs = log_pd(CMatrix(t * t.adjoint()), tol);
    return order_verdict(lhs, rhs, /*want_ge=*/true, tol);
  } catch (const NotPdError&) {
    // Invertible by rank count, but too ill-conditioned for a trustworthy
    // logarithm: same verdict as singular.
    throw SingularInputError(
        "is_log_hyponormal: input too close to singular for log");
  }
}

Verdict is_unitary(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  CMatrix defect = t.adjoint() * t - CMatrix::Identity(t.rows(), t.cols());
  return defect_verdict(defect, tol.atol * s * s);
}

Verdict is_positive(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  Verdict v;
  v.threshold = tol.atol * s;
  const double skew = frobenius_norm(CMatrix(t - t.adjoint()));
  CMatrix sym = 0.5 * (t + t.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  const double lo = es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
  v.residual = std::max(skew, std::max(0.0, -lo));
  v.holds = v.residual <= v.threshold;
  if (!v.holds && lo < 0.0) {
    v.witness_value = Complex(lo, 0.0);
    v.witness_vector = es.eigenvectors().col(0);
  }
  return v;
}

Verdict is_partial_isometry(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  CMatrix defect = t * t.adjoint() * t - t;
  return defect_verdict(defect, tol.atol * s * s * s);
}

Verdict is_square_zero(const CMatrix& t, const ToleranceContext& tol) {
  const double s = scale_of(t);
  return defect_verdict(CMatrix(t * t), tol.atol * s * s);
}

Verdict is_invertible(const CMatrix& t, const ToleranceContext& tol) {
  Verdict v;
  const Index deficiency = t.rows() - numerical_rank(t, tol);
  v.residual = static_cast<double>(deficiency);
  v.threshold = 0.5;  // rank deficiency is integral: 0 iff invertible
  v.holds = deficiency == 0;
  return v;
}

ClassificationReport classify_all(const CMatrix& t,
                                  const ToleranceContext& tol) {
  ClassificationReport report;
  auto add = [&report](const std::string& name, Verdict v) {
    report.entries.push_back({name, std::move(v), ""});
  };
  add("self_adjoint", is_self_adjoint(t, tol));
  add("normal", is_normal(t, tol));
  add("quasinormal", is_quasinormal(t, tol));
  add("binormal", is_binormal(t, tol));
  add("hyponormal", is_hyponormal(t, tol));
  add("semi_hyponormal", is_semi_hyponormal(t, tol));
  add("co_hyponormal", is_co_hyponormal(t, tol));
  add("semi_co_hyponormal", is_semi_co_hyponormal(t, tol));
  try {
    add("log_hyponormal", is_log_hyponormal(t, tol));
  } catch (const SingularInputError&) {
    report.entries.push_back({"log_hyponormal", std::nullopt, "singular"});
  }
  add("unitary", is_unitary(t, tol));
  add("positive", is_positive(t, tol));
  add("partial_isometry", is_partial_isometry(t, tol));
  add("square_zero", is_square_zero(t, tol));
  add("invertible", is_invertible(t, tol));
  return report;
}

}  // namespace meanx
