#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "meanx/classify.hpp"

using namespace meanx;
using meanx::test::gen;

namespace {

bool holds(const ClassificationReport& report, const std::string& name) {
  const ClassificationEntry* entry = report.find(name);
  REQUIRE(entry != nullptr);
  REQUIRE(entry->verdict.has_value());
  return entry->verdict->holds;
}

}  // namespace

TEST_CASE("classification of hand-picked matrices") {
  SUBCASE("identity") {
    ClassificationReport r = classify_all(CMatrix::Identity(3, 3));
    for (const char* name :
         {"self_adjoint", "normal", "quasinormal", "binormal", "hyponormal",
          "unitary", "positive", "partial_isometry", "invertible"}) {
      CHECK_MESSAGE(holds(r, name), name);
    }
    CHECK_FALSE(holds(r, "square_zero"));
  }

  SUBCASE("signature matrix diag(1,-1)") {
    CMatrix t(2, 2);
    t << 1, 0, 0, -1;
    ClassificationReport r = classify_all(t);
    CHECK(holds(r, "self_adjoint"));
    CHECK(holds(r, "unitary"));
    CHECK_FALSE(holds(r, "positive"));
  }

  SUBCASE("elementary nilpotent") {
    CMatrix t(2, 2);
    t << 0, 1, 0, 0;
    ClassificationReport r = classify_all(t);
    CHECK(holds(r, "square_zero"));
    CHECK(holds(r, "partial_isometry"));
    CHECK(holds(r, "binormal"));
    CHECK_FALSE(holds(r, "normal"));
    CHECK_FALSE(holds(r, "quasinormal"));
    CHECK_FALSE(holds(r, "hyponormal"));
    CHECK_FALSE(holds(r, "invertible"));
  }

  SUBCASE("two-weight shift is binormal but not normal") {
    CMatrix t(2, 2);
    t << 0, 2, 1, 0;
    ClassificationReport r = classify_all(t);
    CHECK(holds(r, "binormal"));
    CHECK_FALSE(holds(r, "normal"));
    CHECK(holds(r, "invertible"));
  }
}

TEST_CASE("pinned residual values") {
  CMatrix t(2, 2);
  t << 1, 1, -1, -2;
  // || [T*T, T T*] ||_F for the binormality defect.
  Verdict bin = is_binormal(t);
  CHECK(bin.residual == doctest::Approx(18.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(bin.holds);

  CMatrix shift(2, 2);
  shift << 0, 2, 1, 0;
  // Most negative eigenvalue of T*T - T T* = diag(-3, 3).
  Verdict hyp = is_hyponormal(shift);
  CHECK(hyp.residual == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(hyp.holds);
}

TEST_CASE("failed verdicts carry a witness") {
  CMatrix t(2, 2);
  t << 1, 1, -1, -2;
  Verdict v = is_normal(t);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness_vector.has_value());
  REQUIRE(v.witness_value.has_value());
  // The witness is a unit vector seeing the largest commutator defect.
  CHECK(std::abs(v.witness_vector->norm() - 1.0) < 1e-12);
  CHECK(std::abs(*v.witness_value) > 0.0);
}

TEST_CASE("class lattice inclusions over random ensembles") {
  ToleranceContext tol;
  for (GenKind kind : all_gen_kinds()) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Index n = kind == GenKind::SHIFT_LIKE ? 2 : 2 + (seed % 4);
      const CMatrix t = gen(kind, n, seed);
      ClassificationReport r = classify_all(t, tol);
      // positive => self-adjoint => normal => quasinormal => binormal
      if (holds(r, "positive")) CHECK(holds(r, "self_adjoint"));
      if (holds(r, "self_adjoint")) CHECK(holds(r, "normal"));
      if (holds(r, "normal")) CHECK(holds(r, "quasinormal"));
      if (holds(r, "quasinormal")) CHECK(holds(r, "binormal"));
      // unitary => normal and partial isometry
      if (holds(r, "unitary")) {
        CHECK(holds(r, "normal"));
        CHECK(holds(r, "partial_isometry"));
      }
      // normal => every order-based class
      if (holds(r, "normal")) {
        for (const char* name : {"hyponormal", "semi_hyponormal",
                                 "co_hyponormal", "semi_co_hyponormal"}) {
          CHECK_MESSAGE(holds(r, name), name);
        }
      }
    }
  }
}

TEST_CASE("order-based classes collapse to normality on matrices") {
  ToleranceContext tol;
  for (GenKind kind : all_gen_kinds()) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Index n = kind == GenKind::SHIFT_LIKE ? 2 : 3;
      const CMatrix t = gen(kind, n, seed);
      const bool normal = is_normal(t, tol).holds;
      CHECK(is_hyponormal(t, tol).holds == normal);
      CHECK(is_semi_hyponormal(t, tol).holds == normal);
      CHECK(is_co_hyponormal(t, tol).holds == normal);
      CHECK(is_semi_co_hyponormal(t, tol).holds == normal);
      CHECK(is_quasinormal(t, tol).holds == normal);
    }
  }
}

TEST_CASE("normal matrices satisfy every sampled p-hyponormality") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CMatrix t = gen(GenKind::NORMAL, 4, seed);
    for (double p : {0.25, 0.5, 0.75, 1.0}) {
      CHECK(is_p_hyponormal(t, p).holds);
    }
  }
  CHECK_THROWS_AS(is_p_hyponormal(CMatrix::Identity(2, 2), 0.0),
                  InvalidSpecError);
}

TEST_CASE("log-hyponormality is skipped for singular input") {
  CMatrix singular(2, 2);
  singular << 1, 0, 0, 0;
  ClassificationReport r = classify_all(singular);
  const ClassificationEntry* entry = r.find("log_hyponormal");
  REQUIRE(entry != nullptr);
  CHECK_FALSE(entry->verdict.has_value());
  CHECK_FALSE(entry->skip_reason.empty());

  // Invertible normal input evaluates and holds.
  const CMatrix t = gen(GenKind::UNITARY, 3, 4);
  CHECK(is_log_hyponormal(t).holds);
}

TEST_CASE("verdicts are stable under rescaling above the unit floor") {
  ToleranceContext tol;
  // Unitary and partial-isometry membership is genuinely scale-sensitive,
  // and every threshold bottoms out at an absolute atol once the norm drops
  // below 1. Away from both caveats — norms kept >= 1 on each side of the
  // rescale — residual and threshold scale by the same power of c, so no
  // other class may flip.
  const char* scale_free[] = {"self_adjoint", "normal",     "quasinormal",
                              "binormal",     "hyponormal", "semi_hyponormal",
                              "co_hyponormal", "semi_co_hyponormal",
                              "positive",     "square_zero", "invertible"};
  for (GenKind kind : {GenKind::GINIBRE, GenKind::NORMAL, GenKind::POSITIVE,
                       GenKind::SQUARE_ZERO, GenKind::UNITARY}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const CMatrix t = 1e4 * gen(kind, 3, seed);
      ClassificationReport base = classify_all(t, tol);
      for (double c : {1e-3, 1e3}) {
        ClassificationReport scaled = classify_all(CMatrix(c * t), tol);
        for (const char* name : scale_free) {
          const std::string msg =
              std::string(name) + " flipped at scale " + std::to_string(c);
          CHECK_MESSAGE(holds(base, name) == holds(scaled, name), msg);
        }
      }
    }
  }
}

TEST_CASE("report exposes all classes in a fixed order") {
  ClassificationReport r = classify_all(CMatrix::Identity(2, 2));
  REQUIRE(r.entries.size() == 14);
  CHECK(r.entries.front().name == "self_adjoint");
  CHECK(r.entries.back().name == "invertible");
  CHECK(r.find("no_such_class") == nullptr);
}
