#include "meanx/matrix_core.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace meanx {

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double scale_of(const CMatrix& a) { return std::max(1.0, spectral_norm(a)); }

double frobenius_norm(const CMatrix& a) { return a.norm(); }

CMatrix adjoint(const CMatrix& a) { return a.adjoint(); }

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return a * b - b * a;
}

HermEig herm_eig(const CMatrix& a, const ToleranceContext& tol) {
  const double skew = frobenius_norm(CMatrix(a - a.adjoint()));
  if (skew > tol.rtol * scale_of(a)) {
    throw NotHermitianError("herm_eig: input is not Hermitian (||A - A*|| = " +
                            std::to_string(skew) + ")");
  }
  CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error("herm_eig: eigensolver failed to converge");
  }
  return HermEig{es.eigenvalues(), es.eigenvectors()};
}

namespace {

// Shared scaffolding for the spectral-function routines: decompose, map the
// eigenvalues, reassemble.
template <typename Fn>
CMatrix apply_spectral(const CMatrix& a, const ToleranceContext& tol, Fn fn) {
  HermEig eig = herm_eig(a, tol);
  RVector mapped(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) mapped(i) = fn(eig.values(i));
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

// Clamp the slightly-negative band [-atol*scale, 0) to zero, reject anything
// below it.
RVector clamp_psd_spectrum(const RVector& values, double floor,
                           const char* who) {
  RVector out = values;
  for (Index i = 0; i < out.size(); ++i) {
    if (out(i) < -floor) {
      throw NotPsdError(std::string(who) +
                        ": eigenvalue " + std::to_string(out(i)) +
                        " below PSD tolerance");
    }
    if (out(i) < 0.0) out(i) = 0.0;
  }
  return out;
}

}  // namespace

CMatrix sqrt_psd(const CMatrix& a, const ToleranceContext& tol) {
  HermEig eig = herm_eig(a, tol);
  RVector vals =
      clamp_psd_spectrum(eig.values, tol.atol * scale_of(a), "sqrt_psd");
  for (Index i = 0; i < vals.size(); ++i) vals(i) = std::sqrt(vals(i));
  return eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
}

CMatrix frac_power_psd(const CMatrix& a, double p,
                       const ToleranceContext& tol) {
  if (!(p > 0.0) || p > 1.0) {
    throw InvalidSpecError("frac_power_psd: exponent must lie in (0, 1]");
  }
  HermEig eig = herm_eig(a, tol);
  RVector vals =
      clamp_psd_spectrum(eig.values, tol.atol * scale_of(a), "frac_power_psd");
  for (Index i = 0; i < vals.size(); ++i) vals(i) = std::pow(vals(i), p);
  return eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
}

CMatrix log_pd(const CMatrix& a, const ToleranceContext& tol) {
  const double floor = tol.atol * scale_of(a);
  HermEig eig = herm_eig(a, tol);
  if (eig.values.size() > 0 && eig.values(0) <= floor) {
    throw NotPdError("log_pd: eigenvalue " + std::to_string(eig.values(0)) +
                     " is not strictly positive");
  }
  RVector vals = eig.values;
  for (Index i = 0; i < vals.size(); ++i) vals(i) = std::log(vals(i));
  return eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
}

LoewnerOrder loewner_compare(const CMatrix& a, const CMatrix& b,
                             const ToleranceContext& tol) {
  const double scale =
      std::max({1.0, spectral_norm(a), spectral_norm(b)});
  // Validate Hermitian-ness of the inputs at the shared scale.
  for (const CMatrix* m : {&a, &b}) {
    if (frobenius_norm(CMatrix(*m - m->adjoint())) > tol.rtol * scale) {
      throw NotHermitianError("loewner_compare: input is not Hermitian");
    }
  }
  CMatrix diff = a - b;
  diff = 0.5 * (diff + diff.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(diff, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error("loewner_compare: eigensolver failed to converge");
  }
  const double lo = es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
  const double hi = es.eigenvalues().size()
                        ? es.eigenvalues()(es.eigenvalues().size() - 1)
                        : 0.0;
  const bool ge = lo >= -tol.atol * scale;
  const bool le = hi <= tol.atol * scale;
  if (ge && le) return LoewnerOrder::EQ;
  if (ge) return LoewnerOrder::GE;
  if (le) return LoewnerOrder::LE;
  return LoewnerOrder::INCOMPARABLE;
}

namespace {

// Projector onto the span of the singular vectors selected by `keep`.
CMatrix projector_from_svd(const CMatrix& a, bool onto_range, bool above_cut,
                           const ToleranceContext& tol) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff =
      sigma.size() ? tol.rank_cutoff(std::max(a.rows(), a.cols()), sigma(0))
                   : 0.0;
  CMatrix basis = onto_range ? svd.matrixU() : svd.matrixV();
  const Index dim = onto_range ? a.rows() : a.cols();
  CMatrix proj = CMatrix::Zero(dim, dim);
  for (Index i = 0; i < sigma.size(); ++i) {
    const bool kept = sigma(i) > cutoff;
    if (kept == above_cut) proj += basis.col(i) * basis.col(i).adjoint();
  }
  return proj;
}

}  // namespace

CMatrix projection_onto_range(const CMatrix& a, const ToleranceContext& tol) {
  return projector_from_svd(a, /*onto_range=*/true, /*above_cut=*/true, tol);
}

CMatrix projection_onto_kernel(const CMatrix& a, const ToleranceContext& tol) {
  return projector_from_svd(a, /*onto_range=*/false, /*above_cut=*/false, tol);
}

Index numerical_rank(const CMatrix& a, const ToleranceContext& tol) {
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  const double cutoff =
      tol.rank_cutoff(std::max(a.rows(), a.cols()), sigma(0));
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++r;
  return r;
}

}  // namespace meanx
