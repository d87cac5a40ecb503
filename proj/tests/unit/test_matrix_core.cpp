#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "meanx/matrix_core.hpp"

using namespace meanx;
using meanx::test::gen;
using meanx::test::max_diff;

TEST_CASE("hermitian eigendecomposition on a pinned matrix") {
  CMatrix a(2, 2);
  a << 2, 3, 3, 5;
  HermEig eig = herm_eig(a);
  const double root = std::sqrt(45.0);
  CHECK(eig.values(0) == doctest::Approx((7.0 - root) / 2.0).epsilon(1e-12));
  CHECK(eig.values(1) == doctest::Approx((7.0 + root) / 2.0).epsilon(1e-12));
  const CMatrix rebuilt =
      eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
  CHECK(max_diff(rebuilt, a) < 1e-12);
}

TEST_CASE("hermitian eigendecomposition rejects non-hermitian input") {
  CMatrix a(2, 2);
  a << 0, 1, 0, 0;
  CHECK_THROWS_AS(herm_eig(a), NotHermitianError);
}

TEST_CASE("psd square root on a pinned matrix") {
  CMatrix a(2, 2);
  a << 2, 3, 3, 5;
  CMatrix expected(2, 2);
  expected << 1, 1, 1, 2;
  CHECK(max_diff(sqrt_psd(a), expected) < 1e-12);
}

TEST_CASE("psd square root round-trips on random psd matrices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (Index n : {2, 3, 5, 7}) {
      const CMatrix a = gen(GenKind::POSITIVE, n, seed);
      const CMatrix r = sqrt_psd(a);
      CHECK(frobenius_norm(CMatrix(r * r - a)) <= 1e-10 * scale_of(a));
      // The root itself is PSD.
      HermEig eig = herm_eig(r);
      CHECK(eig.values.minCoeff() >= -1e-10 * scale_of(a));
    }
  }
}

TEST_CASE("psd square root rejects negative definite input") {
  CMatrix a = -CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(sqrt_psd(a), NotPsdError);
}

TEST_CASE("fractional psd powers") {
  CMatrix a(2, 2);
  a << 4, 0, 0, 9;
  CHECK(max_diff(frac_power_psd(a, 0.5), sqrt_psd(a)) < 1e-13);
  CHECK(max_diff(frac_power_psd(a, 1.0), a) < 1e-13);
  CMatrix half = frac_power_psd(a, 0.25);
  CHECK(half(0, 0).real() == doctest::Approx(std::pow(4.0, 0.25)));
  CHECK_THROWS_AS(frac_power_psd(a, 0.0), InvalidSpecError);
  CHECK_THROWS_AS(frac_power_psd(a, 1.5), InvalidSpecError);
  CHECK_THROWS_AS(frac_power_psd(a, -0.5), InvalidSpecError);
}

TEST_CASE("matrix logarithm needs strict positive definiteness") {
  CMatrix a(2, 2);
  a << std::exp(1.0), 0, 0, std::exp(2.0);
  const CMatrix l = log_pd(a);
  CHECK(l(0, 0).real() == doctest::Approx(1.0));
  CHECK(l(1, 1).real() == doctest::Approx(2.0));
  CMatrix singular(2, 2);
  singular << 1, 0, 0, 0;
  CHECK_THROWS_AS(log_pd(singular), NotPdError);
}

TEST_CASE("loewner order classification") {
  const CMatrix id = CMatrix::Identity(2, 2);
  CMatrix big(2, 2);
  big << 2, 0, 0, 3;
  CHECK(loewner_compare(big, id) == LoewnerOrder::GE);
  CHECK(loewner_compare(id, big) == LoewnerOrder::LE);
  CHECK(loewner_compare(big, big) == LoewnerOrder::EQ);
  CMatrix mixed(2, 2);
  mixed << 2, 0, 0, 0.5;
  CHECK(loewner_compare(mixed, id) == LoewnerOrder::INCOMPARABLE);
  CMatrix skew(2, 2);
  skew << 0, 1, 0, 0;
  CHECK_THROWS_AS(loewner_compare(skew, id), NotHermitianError);
}

TEST_CASE("loewner order is transitive-consistent on random triples") {
  ToleranceContext tol;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CMatrix a = gen(GenKind::POSITIVE, 4, 3 * seed);
    const CMatrix b = a + gen(GenKind::POSITIVE, 4, 3 * seed + 1);
    const CMatrix c = b + gen(GenKind::POSITIVE, 4, 3 * seed + 2);
    CHECK(loewner_compare(b, a, tol) == LoewnerOrder::GE);
    CHECK(loewner_compare(c, a, tol) == LoewnerOrder::GE);
    CHECK(loewner_compare(a, c, tol) == LoewnerOrder::LE);
  }
}

TEST_CASE("range and kernel projections") {
  CMatrix a(2, 2);
  a << 1, 0, 0, 0;
  CHECK(max_diff(projection_onto_range(a), a) < 1e-14);
  CMatrix kernel(2, 2);
  kernel << 0, 0, 0, 1;
  CHECK(max_diff(projection_onto_kernel(a), kernel) < 1e-14);
  CHECK(numerical_rank(a) == 1);
  CHECK(numerical_rank(CMatrix::Zero(3, 3)) == 0);
  CHECK(numerical_rank(CMatrix::Identity(4, 4)) == 4);
}

TEST_CASE("projections are idempotent and hermitian on random input") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenSpec spec;
    spec.kind = GenKind::SINGULAR;
    spec.dim = 5;
    spec.seed = seed;
    const CMatrix a = generate(spec);
    for (const CMatrix& p :
         {projection_onto_range(a), projection_onto_kernel(a)}) {
      CHECK(frobenius_norm(CMatrix(p * p - p)) < 1e-12);
      CHECK(frobenius_norm(CMatrix(p - p.adjoint())) < 1e-12);
    }
    // Range and kernel projectors of a square matrix have complementary rank.
    CHECK(numerical_rank(projection_onto_range(a)) +
              numerical_rank(projection_onto_kernel(a)) ==
          5);
  }
}

TEST_CASE("norms, scale, and commutator") {
  CMatrix a(2, 2);
  a << 3, 0, 0, 4;
  CHECK(spectral_norm(a) == doctest::Approx(4.0));
  CHECK(frobenius_norm(a) == doctest::Approx(5.0));
  CHECK(scale_of(a) == doctest::Approx(4.0));
  CHECK(scale_of(CMatrix(0.5 * CMatrix::Identity(2, 2))) ==
        doctest::Approx(1.0));

  CMatrix n(2, 2), d(2, 2);
  n << 0, 1, 0, 0;
  d << 1, 0, 0, 0;
  CMatrix expected(2, 2);
  expected << 0, -1, 0, 0;
  CHECK(max_diff(commutator(n, d), expected) == 0.0);
  CHECK(max_diff(adjoint(n), CMatrix(n.adjoint())) == 0.0);
}
