#include "meanx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "meanx/classify.hpp"
#include "meanx/polar.hpp"
#include "meanx/spectra.hpp"
#include "meanx/transforms.hpp"

namespace meanx {

namespace {

double equality_defect(const CMatrix& a, const CMatrix& b) {
  return frobenius_norm(CMatrix(a - b));
}

bool loewner_ge(const CMatrix& a, const CMatrix& b,
                const ToleranceContext& tol) {
  LoewnerOrder order = loewner_compare(a, b, tol);
  return order == LoewnerOrder::GE || order == LoewnerOrder::EQ;
}

bool loewner_le(const CMatrix& a, const CMatrix& b,
                const ToleranceContext& tol) {
  LoewnerOrder order = loewner_compare(a, b, tol);
  return order == LoewnerOrder::LE || order == LoewnerOrder::EQ;
}

CheckResult fail(std::string detail, double residual = 0.0) {
  return CheckResult{CheckStatus::FAIL, std::move(detail), residual, false};
}

CheckResult skip(std::string reason) {
  return CheckResult{CheckStatus::SKIPPED, std::move(reason), 0.0, false};
}

bool kernel_hypothesis_holds(KernelRelation rel, bool need_equal) {
  if (need_equal) return rel == KernelRelation::EQUAL;
  return rel == KernelRelation::EQUAL ||
         rel == KernelRelation::KER_TSTAR_IN_KER_T;
}

// --- individual statement checks ---------------------------------------

CheckResult check_kernels(const CMatrix& t, const ToleranceContext& tol) {
  PolarParts parts = polar_decompose(t, tol);
  const CMatrix mean = 0.5 * (t + parts.P * parts.V);
  const double thr = tol.atol * scale_of(t);

  PolarParts mean_parts = polar_decompose(mean, tol);
  if (mean_parts.rank != parts.rank) {
    return fail("rank(M(T)) != rank(T)",
                static_cast<double>(mean_parts.rank - parts.rank));
  }

  const CMatrix ker_t = projection_onto_kernel(t, tol);
  const CMatrix ker_mean = projection_onto_kernel(mean, tol);
  const CMatrix ker_v = projection_onto_kernel(parts.V, tol);

  struct Containment {
    const char* label;
    double defect;
  };
  const Containment containments[] = {
      {"Ker(T) in Ker(M(T))", spectral_norm(CMatrix(mean * ker_t))},
      {"Ker(M(T)) in Ker(T)", spectral_norm(CMatrix(t * ker_mean))},
      {"Ker(T) in Ker(V)", spectral_norm(CMatrix(parts.V * ker_t))},
      {"Ker(V) in Ker(T)", spectral_norm(CMatrix(t * ker_v))},
  };
  for (const auto& c : containments) {
    if (c.defect > thr) return fail(c.label, c.defect);
  }

  // Ker(V*) ∩ Ker(V) sits inside Ker(M(T)*): intersect the kernels by
  // stacking V over V*.
  CMatrix stacked(2 * t.rows(), t.cols());
  stacked.topRows(t.rows()) = parts.V;
  stacked.bottomRows(t.rows()) = parts.V.adjoint();
  const CMatrix ker_both = projection_onto_kernel(stacked, tol);
  const double inter_defect =
      spectral_norm(CMatrix(mean.adjoint() * ker_both));
  if (inter_defect > thr) {
    return fail("Ker(V*) ∩ Ker(V) not inside Ker(M(T)*)", inter_defect);
  }

  if (is_binormal(t, tol).holds) {
    const CMatrix ker_vstar =
        projection_onto_kernel(CMatrix(parts.V.adjoint()), tol);
    const CMatrix ker_mstar =
        projection_onto_kernel(CMatrix(mean.adjoint()), tol);
    const double d1 = spectral_norm(CMatrix(mean.adjoint() * ker_vstar));
    const double d2 =
        spectral_norm(CMatrix(parts.V.adjoint() * ker_mstar));
    if (d1 > thr) return fail("binormal: Ker(V*) in Ker(M(T)*)", d1);
    if (d2 > thr) return fail("binormal: Ker(M(T)*) in Ker(V*)", d2);
  }
  return CheckResult{};
}

CheckResult check_mean_polar(const CMatrix& t, const ToleranceContext& tol) {
  if (!kernel_hypothesis_holds(kernel_relation(t, tol), false)) {
    return skip("Ker(T*) not contained in Ker(T)");
  }
  PolarParts parts = polar_decompose(t, tol);
  PolarParts mean_parts = mean_polar_parts(t, tol);
  const CMatrix mean = 0.5 * (t + parts.P * parts.V);
  const double thr = tol.rtol * scale_of(t);

  const double recon =
      equality_defect(CMatrix(mean_parts.V * mean_parts.P), mean);
  if (recon > thr) return fail("V * |M(T)| != M(T)", recon);

  const double mod_defect = equality_defect(
      mean_parts.P, sqrt_psd(CMatrix(mean.adjoint() * mean), tol));
  if (mod_defect > thr) {
    return fail("(|T| + V*|T|V)/2 != |M(T)|", mod_defect);
  }

  const CMatrix adj_formula =
      0.5 * (parts.P + parts.V * parts.P * parts.V.adjoint());
  const double adj_defect = equality_defect(
      adj_formula, sqrt_psd(CMatrix(mean * mean.adjoint()), tol));
  if (adj_defect > thr) {
    return fail("(|T| + V|T|V*)/2 != |M(T)*|", adj_defect);
  }

  // The emitted parts must be a genuine polar decomposition: V's kernel has
  // to match M(T)'s.
  const double athr = tol.atol * scale_of(t);
  const CMatrix ker_v = projection_onto_kernel(parts.V, tol);
  const CMatrix ker_mean = projection_onto_kernel(mean, tol);
  const double k1 = spectral_norm(CMatrix(mean * ker_v));
  const double k2 = spectral_norm(CMatrix(parts.V * ker_mean));
  if (std::max(k1, k2) > athr) {
    return fail("Ker(V) != Ker(M(T))", std::max(k1, k2));
  }
  CheckResult ok;
  ok.collapse_checked = true;  // hypothesis held; statement fully exercised
  return ok;
}

CheckResult check_duggal_moduli(const CMatrix& t, const ToleranceContext& tol) {
  if (!kernel_hypothesis_holds(kernel_relation(t, tol), false)) {
    return skip("Ker(T*) not contained in Ker(T)");
  }
  auto [modulus, adjoint_modulus] = duggal_moduli(t, tol);
  const CMatrix dug = duggal_transform(t, tol);
  const double thr = tol.rtol * scale_of(t);
  const double d1 = equality_defect(
      modulus, sqrt_psd(CMatrix(dug.adjoint() * dug), tol));
  if (d1 > thr) return fail("V*|T|V != |duggal(T)|", d1);
  const double d2 = equality_defect(
      adjoint_modulus, sqrt_psd(CMatrix(dug * dug.adjoint()), tol));
  if (d2 > thr) return fail("|T| != |duggal(T)*|", d2);
  CheckResult ok;
  ok.collapse_checked = true;
  return ok;
}

// Shared scaffolding for the two order-chain statements.
struct ChainStatements {
  bool s1 = false, s2 = false, s3 = false, s4 = false, s5 = false, s6 = false;
};

CheckResult check_chain(const CMatrix& t, const ToleranceContext& tol,
                        bool co_flavor) {
  const KernelRelation rel = kernel_relation(t, tol);
  // The semi-hyponormal chain needs kernel equality; the co flavor only
  // needs Ker(T*) ⊆ Ker(T).
  if (!kernel_hypothesis_holds(rel, /*need_equal=*/!co_flavor)) {
    return skip(co_flavor ? "Ker(T*) not contained in Ker(T)"
                          : "Ker(T) != Ker(T*)");
  }

  PolarParts parts = polar_decompose(t, tol);
  const CMatrix sandwich_down =
      parts.V * parts.P * parts.V.adjoint();  // V|T|V*
  const CMatrix sandwich_up =
      parts.V.adjoint() * parts.P * parts.V;  // V*|T|V
  const CMatrix dug = parts.P * parts.V;
  const CMatrix mean = 0.5 * (t + dug);
  const CMatrix root = sqrt_psd(parts.P, tol);
  const CMatrix aluthge = root * parts.V * root;

  ChainStatements s;
  if (!co_flavor) {
    s.s1 = is_semi_hyponormal(t, tol).holds;
    s.s2 = loewner_le(sandwich_down, parts.P, tol) &&
           loewner_le(parts.P, sandwich_up, tol);
    s.s3 = is_semi_hyponormal(dug, tol).holds;
    s.s4 = is_semi_hyponormal(mean, tol).holds;
    s.s5 = is_hyponormal(aluthge, tol).holds;
    s.s6 = loewner_le(sandwich_down, sandwich_up, tol);
  } else {
    s.s1 = is_semi_co_hyponormal(t, tol).holds;
    s.s2 = loewner_ge(sandwich_down, parts.P, tol) &&
           loewner_ge(parts.P, sandwich_up, tol);
    s.s3 = is_semi_co_hyponormal(dug, tol).holds;
    s.s4 = is_semi_co_hyponormal(mean, tol).holds;
    s.s5 = loewner_ge(sandwich_down, sandwich_up, tol);
    s.s6 = is_co_hyponormal(aluthge, tol).holds;
  }

  std::string broken;
  auto require = [&broken](bool ok, const char* label) {
    if (!ok && broken.empty()) broken = label;
  };
  require(s.s1 == s.s2, "(1)<=>(2)");
  require(s.s2 == s.s3, "(2)<=>(3)");
  require(!s.s3 || s.s4, "(3)=>(4)");
  require(s.s4 == s.s5, "(4)<=>(5)");
  if (!co_flavor) {
    require(s.s5 == s.s6, "(5)<=>(6)");
  } else {
    require(!s.s5 || s.s6, "(5)=>(6)");
    if (rel == KernelRelation::EQUAL) require(!s.s6 || s.s5, "(6)=>(5)");
  }
  if (!broken.empty()) return fail(broken);

  // Finite dimension collapses the left end of the chain to normality.
  CheckResult ok;
  if (s.s1) {
    if (!is_normal(t, tol).holds) {
      return fail("finite-dimensional collapse: statement (1) without "
                  "normality");
    }
    ok.collapse_checked = true;
  }
  return ok;
}

CheckResult check_cohypo_binormal(const CMatrix& t,
                                  const ToleranceContext& tol) {
  if (!is_co_hyponormal(t, tol).holds || !is_binormal(t, tol).holds) {
    return skip("T is not both co-hyponormal and binormal");
  }
  Verdict v = is_co_hyponormal(mean_transform(t, tol), tol);
  if (!v.holds) return fail("M(T) not co-hyponormal", v.residual);
  // Co-hyponormality already collapses to normality here; assert it.
  if (!is_normal(t, tol).holds) {
    return fail("finite-dimensional collapse: co-hyponormal without "
                "normality");
  }
  CheckResult ok;
  ok.collapse_checked = true;
  return ok;
}

CheckResult check_aj(const CMatrix& t, const ToleranceContext& tol) {
  AjInclusionReport report = check_aj_inclusion(t, tol);
  if (!report.holds) {
    double worst = 0.0;
    for (const auto& m : report.matches)
      if (!m.matched) worst = std::max(worst, m.distance);
    return fail("joint point spectrum of T not inside that of M(T)", worst);
  }
  CheckResult ok;
  ok.collapse_checked = !report.points_t.empty();
  return ok;
}

CheckResult check_selfadjoint_equiv(const CMatrix& t,
                                    const ToleranceContext& tol) {
  PolarParts parts = polar_decompose(t, tol);
  const CMatrix mean = 0.5 * (t + parts.P * parts.V);
  const CMatrix mean_of_adjoint = mean_transform(CMatrix(t.adjoint()), tol);

  const double vthr = tol.atol * std::max(1.0, spectral_norm(parts.V));
  const double thr = tol.atol * scale_of(t);
  const bool v_selfadj =
      equality_defect(parts.V, CMatrix(parts.V.adjoint())) <= vthr;
  const bool mean_sym = equality_defect(mean, mean_of_adjoint) <= thr;
  const bool mean_selfadj =
      equality_defect(mean, CMatrix(mean.adjoint())) <= thr;

  if (v_selfadj != mean_sym) return fail("V=V* <=> M(T)=M(T*)");
  if (mean_sym != mean_selfadj) return fail("M(T)=M(T*) <=> M(T)=M(T)*");
  CheckResult ok;
  ok.collapse_checked = v_selfadj;
  return ok;
}

CheckResult check_normal_equiv(const CMatrix& t, const ToleranceContext& tol) {
  if (kernel_relation(t, tol) != KernelRelation::EQUAL) {
    return skip("Ker(T) != Ker(T*)");
  }
  PolarParts parts = polar_decompose(t, tol);
  const CMatrix mean = 0.5 * (t + parts.P * parts.V);
  const double thr = tol.atol * scale_of(t);

  const bool mean_normal = is_normal(mean, tol).holds;
  const bool sandwich_sym =
      equality_defect(CMatrix(parts.V.adjoint() * parts.P * parts.V),
                      CMatrix(parts.V * parts.P * parts.V.adjoint())) <= thr;
  const CMatrix v2 = parts.V * parts.V;
  const bool square_commutes =
      frobenius_norm(commutator(v2, parts.P)) <= thr;
  const bool adjoint_compatible =
      equality_defect(mean_transform(CMatrix(t.adjoint()), tol),
                      CMatrix(mean.adjoint())) <= thr;

  if (mean_normal != sandwich_sym) {
    return fail("M(T) normal <=> V*|T|V = V|T|V*");
  }
  if (sandwich_sym != square_commutes) {
    return fail("V*|T|V = V|T|V* <=> V^2|T| = |T|V^2");
  }
  if (square_commutes != adjoint_compatible) {
    return fail("V^2|T| = |T|V^2 <=> M(T*) = M(T)*");
  }
  CheckResult ok;
  ok.collapse_checked = mean_normal;
  return ok;
}

CheckResult check_normal_corollary(const CMatrix& t,
                                   const ToleranceContext& tol) {
  const CMatrix mean = mean_transform(t, tol);
  if (!is_normal(mean, tol).holds) return skip("M(T) is not normal");
  PolarParts parts = polar_decompose(t, tol);
  const double thr = tol.atol * scale_of(t);

  if (!is_normal(parts.V, tol).holds) return fail("V not normal");
  if (!is_partial_isometry(parts.V, tol).holds) {
    return fail("V not a partial isometry");
  }
  const double sym = equality_defect(
      CMatrix(parts.V * parts.P * parts.V.adjoint()),
      CMatrix(parts.V.adjoint() * parts.P * parts.V));
  if (sym > thr) return fail("V|T|V* != V*|T|V", sym);
  const double comm =
      frobenius_norm(commutator(CMatrix(parts.V * parts.V), parts.P));
  if (comm > thr) return fail("V^2 does not commute with |T|", comm);
  CheckResult ok;
  ok.collapse_checked = true;
  return ok;
}

CheckResult check_positive(const CMatrix& t, const ToleranceContext& tol) {
  const CMatrix mean = mean_transform(t, tol);
  const bool t_pos = is_positive(t, tol).holds;
  const bool mean_pos = is_positive(mean, tol).holds;
  if (t_pos != mean_pos) return fail("M(T) >= 0 <=> T >= 0");
  if (t_pos) {
    const double fixed = equality_defect(mean, t);
    if (fixed > tol.rtol * scale_of(t)) {
      return fail("positive T not fixed by the transform", fixed);
    }
  }
  CheckResult ok;
  ok.collapse_checked = t_pos;
  return ok;
}

CheckResult check_unitary(const CMatrix& t, const ToleranceContext& tol) {
  PolarParts parts = polar_decompose(t, tol);
  // Hypothesis: the spectrum of V holds no two opposite values. Dedupe the
  // eigenvalues first so multiplicity does not flag λ against itself.
  std::vector<Complex> vals = eigenvalues(parts.V);
  std::vector<Complex> reps;
  const double merge = std::sqrt(tol.atol) * std::max(1.0, spectral_norm(parts.V));
  for (const Complex& v : vals) {
    bool seen = false;
    for (const Complex& r : reps) {
      if (std::abs(v - r) <= merge) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(v);
  }
  constexpr double kOppositeGap = 0.05;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (std::abs(reps[i] + reps[j]) <= kOppositeGap) {
        return skip("spectrum of V contains (near-)opposite values");
      }
    }
  }

  const bool t_unitary = is_unitary(t, tol).holds;
  const bool mean_unitary =
      is_unitary(0.5 * (t + parts.P * parts.V), tol).holds;
  if (t_unitary != mean_unitary) return fail("M(T) unitary <=> T unitary");
  CheckResult ok;
  ok.collapse_checked = t_unitary;
  return ok;
}

CheckResult check_nilpotent(const CMatrix& t, const ToleranceContext& tol) {
  const CMatrix mean = mean_transform(t, tol);
  const bool t_sq0 = is_square_zero(t, tol).holds;
  const bool mean_sq0 = is_square_zero(mean, tol).holds;
  const bool halving =
      equality_defect(mean, CMatrix(0.5 * t)) <= tol.atol * scale_of(t);
  if (t_sq0 != mean_sq0) return fail("M(T)^2 = 0 <=> T^2 = 0");
  if (t_sq0 != halving) return fail("T^2 = 0 <=> M(T) = T/2");
  CheckResult ok;
  ok.collapse_checked = t_sq0;
  return ok;
}

bool matches_fixed(const CMatrix& t, const CMatrix& expected) {
  return t.rows() == expected.rows() && t.cols() == expected.cols() &&
         (t - expected).cwiseAbs().maxCoeff() <= 1e-12;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

CheckResult check_selfadjoint_counterexample(const CMatrix& t,
                                             const ToleranceContext& tol) {
  const CMatrix mean = mean_transform(t, tol);
  if (!is_self_adjoint(mean, tol).holds) {
    return fail("M(T) expected self-adjoint");
  }
  if (is_self_adjoint(t, tol).holds) {
    return fail("T unexpectedly self-adjoint");
  }
  if (matches_fixed(t, counterexample_matrix(TheoremId::X4_SELFADJOINT_COUNTEREX))) {
    PolarParts parts = polar_decompose(t, tol);
    CMatrix p_expected(2, 2), v_expected(2, 2), m_expected(2, 2);
    p_expected << 1, 1, 1, 2;
    v_expected << 1, 0, 0, -1;
    m_expected << 1, 0, 0, -2;
    const double worst = std::max({max_abs_diff(parts.P, p_expected),
                                   max_abs_diff(parts.V, v_expected),
                                   max_abs_diff(mean, m_expected)});
    if (worst > tol.atol) return fail("regression against pinned values", worst);
  }
  CheckResult ok;
  ok.collapse_checked = true;
  return ok;
}

CheckResult check_unitary_counterexample(const CMatrix& t,
                                         const ToleranceContext& tol) {
  const CMatrix mean = mean_transform(t, tol);
  if (!is_unitary(mean, tol).holds) return fail("M(T) expected unitary");
  if (is_unitary(t, tol).holds) return fail("T unexpectedly unitary");
  if (matches_fixed(t, counterexample_matrix(TheoremId::X4_UNITARY_COUNTEREX))) {
    PolarParts parts = polar_decompose(t, tol);
    CMatrix p_expected(2, 2), v_expected(2, 2);
    p_expected << 0.5, 0, 0, 1.5;
    v_expected << 0, 1, 1, 0;
    const double worst = std::max({max_abs_diff(parts.P, p_expected),
                                   max_abs_diff(parts.V, v_expected),
                                   max_abs_diff(mean, v_expected)});
    if (worst > tol.atol) return fail("regression against pinned values", worst);
    // Non-injectivity: the unitary V is its own preimage, so M(T) = M(V)
    // with T != V.
    const double fixed = max_abs_diff(mean_transform(v_expected, tol), v_expected);
    if (fixed > tol.atol) return fail("M(V) != V for the unitary V", fixed);
    if (max_abs_diff(t, v_expected) < 0.1) {
      return fail("counterexample degenerate: T coincides with V");
    }
  }
  CheckResult ok;
  ok.collapse_checked = true;
  return ok;
}

std::uint64_t mix64(std::uint64_t x) { return SplitMix64(x).next(); }

std::uint64_t derive_seed(std::uint64_t base, TheoremId id, GenKind kind,
                          Index dim, long trial) {
  std::uint64_t h = base;
  h = mix64(h ^ (0x101ULL + static_cast<std::uint64_t>(id)));
  h = mix64(h ^ (0x202ULL + static_cast<std::uint64_t>(kind)));
  h = mix64(h ^ (static_cast<std::uint64_t>(dim) << 32));
  h = mix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

}  // namespace

CheckResult check_theorem(TheoremId id, const CMatrix& t,
                          const ToleranceContext& tol) {
  switch (id) {
    case TheoremId::P2_1_KERNELS: return check_kernels(t, tol);
    case TheoremId::P2_2_MEAN_POLAR: return check_mean_polar(t, tol);
    case TheoremId::L2_3_DUGGAL_MODULI: return check_duggal_moduli(t, tol);
    case TheoremId::T2_4_SEMIHYPO_CHAIN:
      return check_chain(t, tol, /*co_flavor=*/false);
    case TheoremId::T2_5_SEMICOHYPO_CHAIN:
      return check_chain(t, tol, /*co_flavor=*/true);
    case TheoremId::T2_6_COHYPO_BINORMAL: return check_cohypo_binormal(t, tol);
    case TheoremId::P3_2_AJ_INCLUSION: return check_aj(t, tol);
    case TheoremId::T4_1_SELFADJOINT: return check_selfadjoint_equiv(t, tol);
    case TheoremId::T4_2_NORMAL: return check_normal_equiv(t, tol);
    case TheoremId::C4_3_NORMAL_COROLLARY:
      return check_normal_corollary(t, tol);
    case TheoremId::T4_4_POSITIVE: return check_positive(t, tol);
    case TheoremId::T4_5_UNITARY: return check_unitary(t, tol);
    case TheoremId::T5_1_NILPOTENT: return check_nilpotent(t, tol);
    case TheoremId::X4_SELFADJOINT_COUNTEREX:
      return check_selfadjoint_counterexample(t, tol);
    case TheoremId::X4_UNITARY_COUNTEREX:
      return check_unitary_counterexample(t, tol);
  }
  throw InvalidSpecError("check_theorem: unknown theorem id");
}

CMatrix counterexample_matrix(TheoremId id) {
  CMatrix t(2, 2);
  switch (id) {
    case TheoremId::X4_SELFADJOINT_COUNTEREX:
      t << 1, 1, -1, -2;
      return t;
    case TheoremId::X4_UNITARY_COUNTEREX:
      t << 0, 1.5, 0.5, 0;
      return t;
    default:
      throw InvalidSpecError(
          "counterexample_matrix: statement has no fixed matrix");
  }
}

std::vector<GenKind> default_ensembles(TheoremId id) {
  using K = GenKind;
  switch (id) {
    case TheoremId::P2_1_KERNELS:
      return {K::GINIBRE, K::SINGULAR, K::NORMAL, K::SQUARE_ZERO,
              K::BINORMAL_WEIGHTED_PERM, K::PARTIAL_ISOMETRY};
    case TheoremId::P2_2_MEAN_POLAR:
    case TheoremId::L2_3_DUGGAL_MODULI:
      return {K::GINIBRE, K::NORMAL, K::POSITIVE, K::UNITARY};
    case TheoremId::T2_4_SEMIHYPO_CHAIN:
    case TheoremId::T2_5_SEMICOHYPO_CHAIN:
    case TheoremId::T4_2_NORMAL:
      return {K::GINIBRE, K::NORMAL, K::UNITARY, K::POSITIVE, K::SHIFT_LIKE};
    case TheoremId::T2_6_COHYPO_BINORMAL:
      return {K::NORMAL, K::POSITIVE, K::UNITARY};
    case TheoremId::P3_2_AJ_INCLUSION:
      return {K::GINIBRE, K::NORMAL, K::UNITARY, K::SINGULAR, K::SQUARE_ZERO};
    case TheoremId::T4_1_SELFADJOINT:
      return {K::GINIBRE, K::NORMAL, K::POSITIVE, K::SHIFT_LIKE,
              K::SQUARE_ZERO};
    case TheoremId::C4_3_NORMAL_COROLLARY:
      return {K::NORMAL, K::POSITIVE, K::UNITARY, K::SHIFT_LIKE};
    case TheoremId::T4_4_POSITIVE:
      return {K::GINIBRE, K::POSITIVE, K::NORMAL};
    case TheoremId::T4_5_UNITARY:
      return {K::OPPOSITE_FREE_UNITARY, K::NORMAL, K::POSITIVE, K::GINIBRE};
    case TheoremId::T5_1_NILPOTENT:
      return {K::SQUARE_ZERO, K::GINIBRE, K::NORMAL, K::SHIFT_LIKE};
    case TheoremId::X4_SELFADJOINT_COUNTEREX:
    case TheoremId::X4_UNITARY_COUNTEREX:
      return {};
  }
  return {};
}

VerdictReport run_trials(TheoremId id, const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  ToleranceContext tol = config.tol;
  if (auto it = config.overrides.find(id); it != config.overrides.end()) {
    tol = it->second;
  }

  VerdictReport report;
  report.theorem = id;

  auto account = [&report](EnsembleStats* stats, const CheckResult& result) {
    ++report.trials;
    if (stats) ++stats->trials;
    switch (result.status) {
      case CheckStatus::PASS:
        ++report.passes;
        if (stats) ++stats->passes;
        break;
      case CheckStatus::FAIL:
        ++report.failures;
        if (stats) ++stats->failures;
        break;
      case CheckStatus::SKIPPED:
        ++report.skipped;
        if (stats) ++stats->skipped;
        break;
    }
    if (result.collapse_checked) ++report.collapse_hits;
  };

  if (id == TheoremId::X4_SELFADJOINT_COUNTEREX ||
      id == TheoremId::X4_UNITARY_COUNTEREX) {
    const CheckResult result = check_theorem(id, counterexample_matrix(id), tol);
    account(nullptr, result);
    if (result.status == CheckStatus::FAIL) {
      Counterexample ce;
      ce.spec = GenSpec{};  // fixed matrix, no generator behind it
      ce.detail = "fixed matrix: " + result.detail;
      ce.residual = result.residual;
      report.counterexamples.push_back(std::move(ce));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
  }

  for (GenKind kind : default_ensembles(id)) {
    EnsembleStats stats;
    stats.kind = kind;
    for (Index dim : config.dims) {
      const Index effective_dim = kind == GenKind::SHIFT_LIKE ? 2 : dim;
      for (long trial = 0; trial < config.trials; ++trial) {
        GenSpec spec;
        spec.kind = kind;
        spec.dim = effective_dim;
        spec.seed = derive_seed(config.seed, id, kind, dim, trial);
        const CMatrix t = generate(spec);
        const CheckResult result = check_theorem(id, t, tol);
        account(&stats, result);
        if (result.status == CheckStatus::FAIL &&
            report.counterexamples.size() < config.max_counterexamples) {
          report.counterexamples.push_back(
              Counterexample{spec, result.detail, result.residual});
        }
      }
    }
    if (stats.passes + stats.failures == 0) {
      report.vacuous_kinds.push_back(kind);
    }
    report.per_kind.push_back(stats);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::vector<VerdictReport> run_all(const RunConfig& config) {
  std::vector<VerdictReport> reports;
  for (TheoremId id : all_theorems()) reports.push_back(run_trials(id, config));
  return reports;
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::P2_1_KERNELS,          TheoremId::P2_2_MEAN_POLAR,
          TheoremId::L2_3_DUGGAL_MODULI,    TheoremId::T2_4_SEMIHYPO_CHAIN,
          TheoremId::T2_5_SEMICOHYPO_CHAIN, TheoremId::T2_6_COHYPO_BINORMAL,
          TheoremId::P3_2_AJ_INCLUSION,     TheoremId::T4_1_SELFADJOINT,
          TheoremId::T4_2_NORMAL,           TheoremId::C4_3_NORMAL_COROLLARY,
          TheoremId::T4_4_POSITIVE,         TheoremId::T4_5_UNITARY,
          TheoremId::T5_1_NILPOTENT,
          TheoremId::X4_SELFADJOINT_COUNTEREX,
          TheoremId::X4_UNITARY_COUNTEREX};
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::P2_1_KERNELS: return "P2_1_KERNELS";
    case TheoremId::P2_2_MEAN_POLAR: return "P2_2_MEAN_POLAR";
    case TheoremId::L2_3_DUGGAL_MODULI: return "L2_3_DUGGAL_MODULI";
    case TheoremId::T2_4_SEMIHYPO_CHAIN: return "T2_4_SEMIHYPO_CHAIN";
    case TheoremId::T2_5_SEMICOHYPO_CHAIN: return "T2_5_SEMICOHYPO_CHAIN";
    case TheoremId::T2_6_COHYPO_BINORMAL: return "T2_6_COHYPO_BINORMAL";
    case TheoremId::P3_2_AJ_INCLUSION: return "P3_2_AJ_INCLUSION";
    case TheoremId::T4_1_SELFADJOINT: return "T4_1_SELFADJOINT";
    case TheoremId::T4_2_NORMAL: return "T4_2_NORMAL";
    case TheoremId::C4_3_NORMAL_COROLLARY: return "C4_3_NORMAL_COROLLARY";
    case TheoremId::T4_4_POSITIVE: return "T4_4_POSITIVE";
    case TheoremId::T4_5_UNITARY: return "T4_5_UNITARY";
    case TheoremId::T5_1_NILPOTENT: return "T5_1_NILPOTENT";
    case TheoremId::X4_SELFADJOINT_COUNTEREX:
      return "X4_SELFADJOINT_COUNTEREX";
    case TheoremId::X4_UNITARY_COUNTEREX: return "X4_UNITARY_COUNTEREX";
  }
  return "UNKNOWN";
}

TheoremId theorem_from_string(const std::string& name) {
  for (TheoremId id : all_theorems()) {
    if (theorem_name(id) == name) return id;
  }
  throw InvalidSpecError("unknown theorem id: " + name);
}

}  // namespace meanx
