#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace meanx {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Shared numeric policy. Every tolerance-sensitive routine takes one of
/// these; thresholds are formed as atol (or rtol) times a scale factor so
/// verdicts are stable under T -> c*T.
struct ToleranceContext {
  double atol = 1e-10;
  double rtol = 1e-8;
  /// Per-dimension base for the singular-value cutoff: singular values
  /// sigma <= dim * rank_factor * sigma_max count as zero.
  double rank_factor = 1e-12;

  double rank_cutoff(Index dim, double sigma_max) const {
    return static_cast<double>(dim) * rank_factor * sigma_max;
  }
};

/// scale(A) = max(1, ||A||_2); the unit floor keeps absolute tolerances
/// meaningful for small matrices.
double scale_of(const CMatrix& a);

/// Largest singular value.
double spectral_norm(const CMatrix& a);

/// Base class for all validation failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHermitianError : Error {
  using Error::Error;
};
struct NotPsdError : Error {
  using Error::Error;
};
struct NotPdError : Error {
  using Error::Error;
};
struct KernelConditionError : Error {
  using Error::Error;
};
struct SingularInputError : Error {
  using Error::Error;
};
struct ZeroVectorError : Error {
  using Error::Error;
};
struct DegenerateSpecError : Error {
  using Error::Error;
};
struct NotSquareZeroError : Error {
  using Error::Error;
};
struct NotPositiveError : Error {
  using Error::Error;
};
struct ZeroLambdaError : Error {
  using Error::Error;
};
struct InvalidSpecError : Error {
  using Error::Error;
};

}  // namespace meanx
