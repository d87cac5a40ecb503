#include "meanx/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace meanx {

double SplitMix64::gaussian() {
  // Box-Muller on two fresh uniforms; u1 shifted away from zero so the log
  // is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex SplitMix64::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

namespace {

CMatrix ginibre(Index n, SplitMix64& rng) {
  CMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

// Haar-ish unitary: QR of a Ginibre sample with the R diagonal phases folded
// into Q so the result does not depend on QR sign conventions.
CMatrix haar_unitary(Index n, SplitMix64& rng) {
  CMatrix g = ginibre(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const Complex phase = std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
    q.col(i) *= phase;
  }
  return q;
}

std::vector<Index> random_permutation(Index n, SplitMix64& rng) {
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  // Fisher-Yates with explicit modular draws (portable, bias negligible).
  for (Index i = n - 1; i > 0; --i) {
    const Index j = static_cast<Index>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

Index pick_rank(const GenSpec& spec, SplitMix64& rng, Index lo, Index hi) {
  if (spec.rank >= 0) {
    if (spec.rank < lo || spec.rank > hi) {
      throw InvalidSpecError("generate: rank " + std::to_string(spec.rank) +
                             " out of range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    }
    return spec.rank;
  }
  if (hi < lo) return lo;
  return lo + static_cast<Index>(rng.next() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
}

CMatrix opposite_free_unitary(Index n, SplitMix64& rng) {
  constexpr double kGap = 0.1;  // min distance of phase differences from pi
  std::vector<double> phases(n);
  while (true) {
    for (Index i = 0; i < n; ++i)
      phases[i] = 2.0 * std::numbers::pi * rng.uniform();
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i) {
      for (Index j = i + 1; j < n && ok; ++j) {
        double d = std::fmod(std::abs(phases[i] - phases[j]),
                             2.0 * std::numbers::pi);
        if (std::abs(d - std::numbers::pi) < kGap) ok = false;
      }
    }
    if (ok) break;
  }
  CMatrix q = haar_unitary(n, rng);
  CVector diag(n);
  for (Index i = 0; i < n; ++i)
    diag(i) = std::polar(1.0, phases[i]);
  return q * diag.asDiagonal() * q.adjoint();
}

}  // namespace

CMatrix generate(const GenSpec& spec) {
  const Index n = spec.dim;
  if (n < 1) throw InvalidSpecError("generate: dim must be >= 1");
  SplitMix64 rng(spec.seed);

  switch (spec.kind) {
    case GenKind::GINIBRE:
      return ginibre(n, rng);

    case GenKind::UNITARY:
      return haar_unitary(n, rng);

    case GenKind::NORMAL: {
      CMatrix q = haar_unitary(n, rng);
      CVector diag(n);
      for (Index i = 0; i < n; ++i) diag(i) = rng.complex_gaussian();
      return q * diag.asDiagonal() * q.adjoint();
    }

    case GenKind::POSITIVE: {
      CMatrix g = ginibre(n, rng);
      CMatrix p = g.adjoint() * g;
      if (spec.ridge) p += 1e-3 * scale_of(p) * CMatrix::Identity(n, n);
      // Hermitian symmetrization kills the rounding skew of G*G.
      return 0.5 * (p + p.adjoint());
    }

    case GenKind::PARTIAL_ISOMETRY: {
      const Index r = pick_rank(spec, rng, 1, n);
      CMatrix u = haar_unitary(n, rng);
      CMatrix w = haar_unitary(n, rng);
      return u.leftCols(r) * w.leftCols(r).adjoint();
    }

    case GenKind::BINORMAL_WEIGHTED_PERM: {
      // Nonnegative diagonal times a permutation; weights include exact
      // zeros so the kernel structure is exercised.
      std::vector<Index> perm = random_permutation(n, rng);
      CMatrix m = CMatrix::Zero(n, n);
      for (Index j = 0; j < n; ++j) {
        const bool zero = rng.uniform() < 0.25;
        const double w = zero ? 0.0 : 0.25 + std::abs(rng.gaussian());
        m(perm[j], j) = w;  // column j hits row perm[j] with weight w
      }
      return m;
    }

    case GenKind::SQUARE_ZERO: {
      if (n == 1) return CMatrix::Zero(1, 1);
      const Index k = n / 2;
      CMatrix block = CMatrix::Zero(n, n);
      for (Index i = 0; i < k; ++i)
        for (Index j = k; j < n; ++j) block(i, j) = rng.complex_gaussian();
      CMatrix q = haar_unitary(n, rng);
      return q * block * q.adjoint();
    }

    case GenKind::SINGULAR: {
      const Index r = pick_rank(spec, rng, n > 1 ? 1 : 0, n - 1);
      CMatrix g = ginibre(n, rng);
      Eigen::JacobiSVD<CMatrix> svd(g,
                                    Eigen::ComputeFullU | Eigen::ComputeFullV);
      CMatrix out = CMatrix::Zero(n, n);
      for (Index i = 0; i < r; ++i) {
        out += svd.singularValues()(i) * svd.matrixU().col(i) *
               svd.matrixV().col(i).adjoint();
      }
      return out;
    }

    case GenKind::OPPOSITE_FREE_UNITARY:
      return opposite_free_unitary(n, rng);

    case GenKind::SHIFT_LIKE: {
      if (n != 2) {
        throw InvalidSpecError("generate: SHIFT_LIKE requires dim == 2");
      }
      double a = spec.a;
      double b = spec.b;
      if (a <= 0.0 || b <= 0.0) {
        a = 0.25 + 1.75 * rng.uniform();
        do {
          b = 0.25 + 1.75 * rng.uniform();
        } while (std::abs(a - b) < 0.05);
      }
      if (a == b) {
        throw InvalidSpecError("generate: SHIFT_LIKE requires a != b");
      }
      CMatrix m = CMatrix::Zero(2, 2);
      m(0, 1) = b;
      m(1, 0) = a;
      return m;
    }
  }
  throw InvalidSpecError("generate: unknown kind");
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::GINIBRE: return "GINIBRE";
    case GenKind::UNITARY: return "UNITARY";
    case GenKind::NORMAL: return "NORMAL";
    case GenKind::POSITIVE: return "POSITIVE";
    case GenKind::PARTIAL_ISOMETRY: return "PARTIAL_ISOMETRY";
    case GenKind::BINORMAL_WEIGHTED_PERM: return "BINORMAL_WEIGHTED_PERM";
    case GenKind::SQUARE_ZERO: return "SQUARE_ZERO";
    case GenKind::SINGULAR: return "SINGULAR";
    case GenKind::OPPOSITE_FREE_UNITARY: return "OPPOSITE_FREE_UNITARY";
    case GenKind::SHIFT_LIKE: return "SHIFT_LIKE";
  }
  return "UNKNOWN";
}

std::vector<GenKind> all_gen_kinds() {
  return {GenKind::GINIBRE, GenKind::UNITARY, GenKind::NORMAL,
          GenKind::POSITIVE, GenKind::PARTIAL_ISOMETRY,
          GenKind::BINORMAL_WEIGHTED_PERM, GenKind::SQUARE_ZERO,
          GenKind::SINGULAR, GenKind::OPPOSITE_FREE_UNITARY,
          GenKind::SHIFT_LIKE};
}

GenKind gen_kind_from_string(const std::string& name) {
  for (GenKind kind : all_gen_kinds()) {
    if (gen_kind_name(kind) == name) return kind;
  }
  throw InvalidSpecError("unknown generator kind: " + name);
}

}  // namespace meanx
