#include "meanx/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "meanx/transforms.hpp"

namespace meanx {

std::vector<Complex> eigenvalues(const CMatrix& t) {
  Eigen::ComplexEigenSolver<CMatrix> es(t, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error("eigenvalues: eigensolver failed to converge");
  }
  std::vector<Complex> vals(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return vals;
}

namespace {

std::vector<Complex> dedupe(const std::vector<Complex>& sorted_vals,
                            double radius) {
  std::vector<Complex> reps;
  for (const Complex& v : sorted_vals) {
    bool merged = false;
    for (const Complex& rep : reps) {
      if (std::abs(v - rep) <= radius) {
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(v);
  }
  return reps;
}

}  // namespace

std::vector<JointSpectrumPoint> joint_point_spectrum(
    const CMatrix& t, const ToleranceContext& tol) {
  const Index n = t.rows();
  const double scale = scale_of(t);
  const double accept = tol.atol * scale;
  std::vector<Complex> reps =
      dedupe(eigenvalues(t), std::sqrt(tol.atol) * scale);

  std::vector<JointSpectrumPoint> points;
  const CMatrix tstar = t.adjoint();
  for (const Complex& lambda : reps) {
    CMatrix stacked(2 * n, n);
    stacked.topRows(n) = t - lambda * CMatrix::Identity(n, n);
    stacked.bottomRows(n) =
        tstar - std::conj(lambda) * CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    if (sigma(sigma.size() - 1) > accept) continue;
    JointSpectrumPoint point;
    point.lambda = lambda;
    point.witness = svd.matrixV().col(sigma.size() - 1);
    point.residual_t = (t * point.witness - lambda * point.witness).norm();
    point.residual_tstar =
        (tstar * point.witness - std::conj(lambda) * point.witness).norm();
    points.push_back(std::move(point));
  }
  return points;
}

XiaWitness xia_witness_check(const CMatrix& t, const JointSpectrumPoint& point,
                             const ToleranceContext& tol) {
  const double scale = scale_of(t);
  const double mod = std::abs(point.lambda);
  if (mod <= tol.atol * scale) {
    throw ZeroLambdaError("xia_witness_check: requires a nonzero eigenvalue");
  }
  PolarParts parts = polar_decompose(t, tol);
  const Complex phase = point.lambda / mod;
  const CVector& x = point.witness;

  XiaWitness result;
  result.modulus_defect = (parts.P * x - mod * x).norm();
  result.adjoint_modulus_defect = (abs_adjoint(parts) * x - mod * x).norm();
  result.isometry_defect = (parts.V * x - phase * x).norm();
  result.adjoint_isometry_defect =
      (parts.V.adjoint() * x - std::conj(phase) * x).norm();
  const double threshold = std::sqrt(tol.atol) * scale;
  result.holds = result.modulus_defect <= threshold &&
                 result.adjoint_modulus_defect <= threshold &&
                 result.isometry_defect <= threshold &&
                 result.adjoint_isometry_defect <= threshold;
  return result;
}

AjInclusionReport check_aj_inclusion(const CMatrix& t,
                                     const ToleranceContext& tol) {
  AjInclusionReport report;
  report.points_t = joint_point_spectrum(t, tol);
  report.points_mean = joint_point_spectrum(mean_transform(t, tol), tol);
  const double match_radius = std::sqrt(tol.atol) * scale_of(t);
  for (const auto& point : report.points_t) {
    AjMatch match;
    match.lambda = point.lambda;
    double best = -1.0;
    for (const auto& target : report.points_mean) {
      const double dist = std::abs(point.lambda - target.lambda);
      if (best < 0.0 || dist < best) {
        best = dist;
        match.mu = target.lambda;
      }
    }
    match.distance = best;
    match.matched = best >= 0.0 && best <= match_radius;
    if (!match.matched) report.holds = false;
    report.matches.push_back(match);
  }
  return report;
}

}  // namespace meanx
