#include <doctest.h>

#include "helpers.hpp"
#include "meanx/classify.hpp"
#include "meanx/polar.hpp"
#include "meanx/transforms.hpp"

using namespace meanx;
using meanx::test::gen;
using meanx::test::max_diff;

namespace {

CMatrix pinned_t() {
  CMatrix t(2, 2);
  t << 1, 1, -1, -2;
  return t;
}

}  // namespace

TEST_CASE("transforms of the pinned invertible matrix") {
  const CMatrix t = pinned_t();

  CMatrix mean_expected(2, 2);
  mean_expected << 1, 0, 0, -2;
  CHECK(max_diff(mean_transform(t), mean_expected) < 1e-10);

  CMatrix duggal_expected(2, 2);  // |T| V
  duggal_expected << 1, -1, 1, -2;
  CHECK(max_diff(duggal_transform(t), duggal_expected) < 1e-10);
}

TEST_CASE("aluthge transform of the pinned weighted shift") {
  CMatrix t(2, 2);
  t << 0, 1.5, 0.5, 0;
  const double half_root3 = std::sqrt(3.0) / 2.0;
  CMatrix expected(2, 2);
  expected << 0, half_root3, half_root3, 0;
  CHECK(max_diff(aluthge_transform(t), expected) < 1e-12);

  CMatrix mean_expected(2, 2);  // the mean lands on the isometry factor
  mean_expected << 0, 1, 1, 0;
  CHECK(max_diff(mean_transform(t), mean_expected) < 1e-12);
}

TEST_CASE("transform bundle matches the standalone functions") {
  const CMatrix t = gen(GenKind::GINIBRE, 4, 11);
  TransformBundle bundle = transform_bundle(t);
  CHECK(max_diff(bundle.mean, mean_transform(t)) < 1e-13);
  CHECK(max_diff(bundle.duggal, duggal_transform(t)) < 1e-13);
  CHECK(max_diff(bundle.aluthge, aluthge_transform(t)) < 1e-13);
  CHECK(max_diff(CMatrix(bundle.parts.V * bundle.parts.P), t) < 1e-12);
}

TEST_CASE("normal matrices are fixed points of all three transforms") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CMatrix t = gen(GenKind::NORMAL, 4, seed);
    const double s = scale_of(t);
    CHECK(max_diff(mean_transform(t), t) <= 1e-9 * s);
    CHECK(max_diff(duggal_transform(t), t) <= 1e-9 * s);
    CHECK(max_diff(aluthge_transform(t), t) <= 1e-9 * s);
  }
}

TEST_CASE("square-zero matrices are halved by the mean transform") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (Index n : {2, 4, 6}) {
      const CMatrix t = gen(GenKind::SQUARE_ZERO, n, seed);
      CHECK(max_diff(mean_transform(t), CMatrix(0.5 * t)) <=
            1e-10 * scale_of(t));
    }
  }
}

TEST_CASE("mean transform preserves rank") {
  for (GenKind kind : {GenKind::GINIBRE, GenKind::SINGULAR,
                       GenKind::SQUARE_ZERO, GenKind::PARTIAL_ISOMETRY}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const CMatrix t = gen(kind, 5, seed);
      CHECK(numerical_rank(mean_transform(t)) == numerical_rank(t));
    }
  }
}

TEST_CASE("mean polar parts on the pinned matrix") {
  PolarParts parts = mean_polar_parts(pinned_t());
  CMatrix q_expected(2, 2);
  q_expected << 1, 0, 0, 2;
  CMatrix v_expected(2, 2);
  v_expected << 1, 0, 0, -1;
  CHECK(max_diff(parts.P, q_expected) < 1e-10);
  CHECK(max_diff(parts.V, v_expected) < 1e-10);
  CHECK(max_diff(CMatrix(parts.V * parts.P), mean_transform(pinned_t())) <
        1e-10);
}

TEST_CASE("mean polar parts factor the mean transform on random input") {
  ToleranceContext tol;
  for (GenKind kind : {GenKind::GINIBRE, GenKind::NORMAL, GenKind::POSITIVE,
                       GenKind::UNITARY}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const CMatrix t = gen(kind, 4, seed);
      const double s = scale_of(t);
      PolarParts parts = mean_polar_parts(t, tol);
      const CMatrix mean = mean_transform(t, tol);
      CHECK(frobenius_norm(CMatrix(parts.V * parts.P - mean)) <= 1e-8 * s);
      // The emitted modulus really is |M(T)|.
      const CMatrix q = sqrt_psd(CMatrix(mean.adjoint() * mean), tol);
      CHECK(frobenius_norm(CMatrix(parts.P - q)) <= 1e-8 * s);
    }
  }
}

TEST_CASE("mean polar parts need Ker(T*) inside Ker(T)") {
  CMatrix nilpotent(2, 2);
  nilpotent << 0, 1, 0, 0;
  CHECK_THROWS_AS(mean_polar_parts(nilpotent), KernelConditionError);
  CHECK_THROWS_AS(duggal_moduli(nilpotent), KernelConditionError);
}

TEST_CASE("duggal transform moduli on the pinned matrix") {
  auto [modulus, adjoint_modulus] = duggal_moduli(pinned_t());
  CMatrix mod_expected(2, 2);
  mod_expected << 1, -1, -1, 2;  // V* |T| V
  CMatrix adj_expected(2, 2);
  adj_expected << 1, 1, 1, 2;  // |T|
  CHECK(max_diff(modulus, mod_expected) < 1e-10);
  CHECK(max_diff(adjoint_modulus, adj_expected) < 1e-10);

  // Cross-check against the moduli computed from the transform itself.
  const CMatrix dug = duggal_transform(pinned_t());
  CHECK(max_diff(modulus, sqrt_psd(CMatrix(dug.adjoint() * dug))) < 1e-8);
  CHECK(max_diff(adjoint_modulus, sqrt_psd(CMatrix(dug * dug.adjoint()))) <
        1e-8);
}
