#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "meanx/spectra.hpp"
#include "meanx/transforms.hpp"

using namespace meanx;
using meanx::test::gen;

TEST_CASE("eigenvalues come back sorted lexicographically") {
  CMatrix t = CMatrix::Zero(3, 3);
  t(0, 0) = 3.0;
  t(1, 1) = 1.0;
  t(2, 2) = 2.0;
  auto ev = eigenvalues(t);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0].real() == doctest::Approx(1.0));
  CHECK(ev[1].real() == doctest::Approx(2.0));
  CHECK(ev[2].real() == doctest::Approx(3.0));

  CMatrix ties(2, 2);
  ties << Complex(1, 1), 0, 0, Complex(1, -1);
  auto tied = eigenvalues(ties);
  CHECK(tied[0].imag() == doctest::Approx(-1.0));
  CHECK(tied[1].imag() == doctest::Approx(1.0));
}

TEST_CASE("joint point spectrum of a normal matrix is its full spectrum") {
  CMatrix t = CMatrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = 2.0;
  auto pts = joint_point_spectrum(t);
  REQUIRE(pts.size() == 2);
  CHECK(std::abs(pts[0].lambda - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pts[1].lambda - Complex(2, 0)) < 1e-12);
  for (const auto& p : pts) {
    CHECK(p.residual_t < 1e-12);
    CHECK(p.residual_tstar < 1e-12);
    CHECK(std::abs(p.witness.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("joint point spectrum is empty without a shared eigenvector") {
  CMatrix t(2, 2);
  t << 0, 1, 0, 0;
  CHECK(joint_point_spectrum(t).empty());
}

TEST_CASE("joint point spectrum finds a shared kernel direction") {
  // Ker T = span{e1,e2}, Ker T* = span{e2,e3}; e2 is a joint eigenvector
  // at zero.
  CMatrix t = CMatrix::Zero(3, 3);
  t(0, 2) = 1.0;
  auto pts = joint_point_spectrum(t);
  REQUIRE(pts.size() == 1);
  CHECK(std::abs(pts[0].lambda) < 1e-12);
  CHECK(std::abs(std::abs(pts[0].witness(1)) - 1.0) < 1e-10);
}

TEST_CASE("joint point spectrum ignores the defective block") {
  CMatrix t = CMatrix::Zero(3, 3);
  t(0, 0) = 3.0;  // normal 1x1 block
  t(1, 2) = 1.0;  // nilpotent block, no joint eigenvector
  auto pts = joint_point_spectrum(t);
  REQUIRE(pts.size() == 1);
  CHECK(std::abs(pts[0].lambda - Complex(3, 0)) < 1e-12);
}

TEST_CASE("nearby eigenvalues are merged before testing") {
  CMatrix t = CMatrix::Zero(3, 3);
  t(0, 0) = 1.0;
  t(1, 1) = 1.0 + 1e-9;
  t(2, 2) = 5.0;
  auto pts = joint_point_spectrum(t);
  CHECK(pts.size() == 2);
}

TEST_CASE("phase-isometry witness for nonzero joint eigenvalues") {
  CMatrix t = CMatrix::Zero(2, 2);
  t(0, 0) = Complex(0, 2);
  t(1, 1) = 1.0;
  auto pts = joint_point_spectrum(t);
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    XiaWitness w = xia_witness_check(t, p);
    CHECK(w.holds);
    CHECK(w.modulus_defect < 1e-8);
    CHECK(w.adjoint_modulus_defect < 1e-8);
    CHECK(w.isometry_defect < 1e-8);
    CHECK(w.adjoint_isometry_defect < 1e-8);
  }
}

TEST_CASE("phase-isometry witness rejects zero eigenvalues") {
  CMatrix t = CMatrix::Zero(2, 2);
  auto pts = joint_point_spectrum(t);
  REQUIRE_FALSE(pts.empty());
  CHECK_THROWS_AS(xia_witness_check(t, pts.front()), ZeroLambdaError);
}

TEST_CASE("inclusion check against the mean transform") {
  SUBCASE("normal input matches point for point") {
    const CMatrix t = gen(GenKind::NORMAL, 4, 3);
    AjInclusionReport rep = check_aj_inclusion(t);
    CHECK(rep.holds);
    CHECK(rep.points_t.size() == rep.matches.size());
    for (const auto& m : rep.matches) {
      CHECK(m.matched);
      CHECK(m.distance < 1e-8);
    }
  }

  SUBCASE("empty joint spectrum holds vacuously") {
    CMatrix t(2, 2);
    t << 0, 1, 0, 0;
    AjInclusionReport rep = check_aj_inclusion(t);
    CHECK(rep.holds);
    CHECK(rep.points_t.empty());
  }

  SUBCASE("random singular ensembles keep the inclusion") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (GenKind kind : {GenKind::SINGULAR, GenKind::SQUARE_ZERO}) {
        CHECK(check_aj_inclusion(gen(kind, 4, seed)).holds);
      }
    }
  }
}
