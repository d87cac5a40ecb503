#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "meanx/classify.hpp"
#include "meanx/generators.hpp"
#include "meanx/inverse_solve.hpp"
#include "meanx/polar.hpp"
#include "meanx/spectra.hpp"
#include "meanx/transforms.hpp"
#include "meanx/verify.hpp"

namespace py = pybind11;
using namespace meanx;

namespace {

ToleranceContext make_tol(double atol, double rtol, double rank_factor) {
  ToleranceContext tol;
  tol.atol = atol;
  tol.rtol = rtol;
  tol.rank_factor = rank_factor;
  return tol;
}

py::dict polar_dict(const PolarParts& parts) {
  py::dict d;
  d["partial_isometry"] = parts.V;
  d["modulus"] = parts.P;
  d["rank"] = parts.rank;
  d["cutoff"] = parts.cutoff;
  d["spectral_gap"] = parts.gap;
  return d;
}

py::dict preimage_dict(const MeanPreimage& pre, const ToleranceContext& tol,
                       std::optional<Complex> beta) {
  py::dict d;
  const char* kind = "unique";
  if (pre.kind == MeanPreimage::Kind::FAMILY) kind = "family";
  if (pre.kind == MeanPreimage::Kind::FIXED_POINT) kind = "fixed_point";
  d["kind"] = kind;
  CMatrix solution = pre.solution;
  if (pre.kind == MeanPreimage::Kind::FAMILY) {
    d["admissible_radius_sq"] = pre.admissible_radius_sq;
    if (beta) solution = pre.family_evaluator(*beta);
  }
  d["solution"] = solution;
  d["mean_of_solution"] = mean_transform(solution, tol);
  if (!pre.warning.empty()) d["warning"] = pre.warning;
  return d;
}

}  // namespace

PYBIND11_MODULE(meanx, m) {
  m.doc() = "mean transform toolkit for square complex matrices";

  const ToleranceContext def;

  m.def(
      "polar",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        return polar_dict(polar_decompose(t, make_tol(atol, rtol, rank_factor)));
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Polar decomposition T = V|T| with Ker(V) = Ker(T).");

  auto add_transform = [&](const char* name,
                           CMatrix (*fn)(const CMatrix&,
                                         const ToleranceContext&),
                           const char* doc) {
    m.def(
        name,
        [fn](const CMatrix& t, double atol, double rtol, double rank_factor) {
          return fn(t, make_tol(atol, rtol, rank_factor));
        },
        py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
        py::arg("rank_factor") = def.rank_factor, doc);
  };
  add_transform("mean_transform", &mean_transform, "(T + |T|V)/2 for T = V|T|.");
  add_transform("duggal_transform", &duggal_transform, "|T|V for T = V|T|.");
  add_transform("aluthge_transform", &aluthge_transform,
                "|T|^(1/2) V |T|^(1/2) for T = V|T|.");

  m.def(
      "mean_polar_parts",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        PolarParts parts =
            mean_polar_parts(t, make_tol(atol, rtol, rank_factor));
        return py::make_tuple(parts.V, parts.P);
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Pair (V, (|T| + V*|T|V)/2): a polar decomposition of the mean "
      "transform. Needs Ker(T*) inside Ker(T).");

  m.def(
      "kernel_relation",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        switch (kernel_relation(t, make_tol(atol, rtol, rank_factor))) {
          case KernelRelation::EQUAL: return "equal";
          case KernelRelation::KER_T_IN_KER_TSTAR:
            return "ker_t_in_ker_t_adjoint";
          case KernelRelation::KER_TSTAR_IN_KER_T:
            return "ker_t_adjoint_in_ker_t";
          default: return "none";
        }
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor);

  m.def(
      "classify",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        ClassificationReport report =
            classify_all(t, make_tol(atol, rtol, rank_factor));
        py::dict d;
        for (const ClassificationEntry& e : report.entries) {
          if (e.verdict) {
            py::dict v;
            v["holds"] = e.verdict->holds;
            v["residual"] = e.verdict->residual;
            v["threshold"] = e.verdict->threshold;
            d[e.name.c_str()] = v;
          } else {
            d[e.name.c_str()] = py::none();
          }
        }
        return d;
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Operator-class membership: name -> {holds, residual, threshold}, or "
      "None when a class could not be evaluated.");

  m.def(
      "eigenvalues", [](const CMatrix& t) { return eigenvalues(t); },
      py::arg("t"), "Eigenvalues sorted by real part, then imaginary part.");

  m.def(
      "joint_point_spectrum",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        py::list out;
        for (const JointSpectrumPoint& p :
             joint_point_spectrum(t, make_tol(atol, rtol, rank_factor))) {
          py::dict d;
          d["lambda"] = p.lambda;
          d["witness"] = p.witness;
          d["residual_t"] = p.residual_t;
          d["residual_t_adjoint"] = p.residual_tstar;
          out.append(d);
        }
        return out;
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Eigenvalues whose eigenvector also serves the adjoint at the "
      "conjugate value.");

  m.def(
      "aj_inclusion_holds",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        return check_aj_inclusion(t, make_tol(atol, rtol, rank_factor)).holds;
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Joint point spectrum of T stays inside that of the mean transform.");

  m.def(
      "solve_rank_one",
      [](const CVector& x, const CVector& y, double atol, double rtol,
         double rank_factor) {
        const ToleranceContext tol = make_tol(atol, rtol, rank_factor);
        return preimage_dict(solve_rank_one(RankOneSpec{x, y}, tol), tol,
                             std::nullopt);
      },
      py::arg("x"), py::arg("y"), py::arg("atol") = def.atol,
      py::arg("rtol") = def.rtol, py::arg("rank_factor") = def.rank_factor,
      "X with mean_transform(X) = x y*.");

  m.def(
      "solve_rank_two_normal",
      [](Complex delta, Complex nu, std::optional<CVector> x,
         std::optional<CVector> y, std::optional<Complex> beta, double atol,
         double rtol, double rank_factor) {
        const ToleranceContext tol = make_tol(atol, rtol, rank_factor);
        RankTwoNormalSpec spec;
        spec.delta = delta;
        spec.nu = nu;
        spec.x = x ? *x : CVector(CVector::Unit(2, 0));
        spec.y = y ? *y : CVector(CVector::Unit(2, 1));
        return preimage_dict(solve_rank_two_normal(spec, tol), tol, beta);
      },
      py::arg("delta"), py::arg("nu"), py::arg("x") = std::nullopt,
      py::arg("y") = std::nullopt, py::arg("beta") = std::nullopt,
      py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "X with mean_transform(X) = delta x x* + nu y y* for orthonormal x, y.");

  m.def(
      "solve_square_zero",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        const ToleranceContext tol = make_tol(atol, rtol, rank_factor);
        return preimage_dict(solve_square_zero(t, tol), tol, std::nullopt);
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "X = 2T with mean_transform(X) = T for square-zero T.");

  m.def(
      "solve_positive",
      [](const CMatrix& t, double atol, double rtol, double rank_factor) {
        const ToleranceContext tol = make_tol(atol, rtol, rank_factor);
        return preimage_dict(solve_positive(t, tol), tol, std::nullopt);
      },
      py::arg("t"), py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Positive matrices are fixed points: X = T.");

  m.def(
      "generate",
      [](const std::string& kind, Index dim, std::uint64_t seed, long rank) {
        GenSpec spec;
        spec.kind = gen_kind_from_string(kind);
        spec.dim = dim;
        spec.seed = seed;
        spec.rank = rank;
        return generate(spec);
      },
      py::arg("kind"), py::arg("dim"), py::arg("seed"), py::arg("rank") = -1,
      "Deterministic random matrix from a named ensemble.");

  m.def("generator_kinds", [] {
    py::list out;
    for (GenKind k : all_gen_kinds()) out.append(gen_kind_name(k));
    return out;
  });

  m.def("theorems", [] {
    py::list out;
    for (TheoremId id : all_theorems()) out.append(theorem_name(id));
    return out;
  });

  m.def(
      "run_trials",
      [](const std::string& theorem, std::vector<Index> dims, long trials,
         std::uint64_t seed, double atol, double rtol, double rank_factor) {
        RunConfig cfg;
        cfg.dims = std::move(dims);
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.tol = make_tol(atol, rtol, rank_factor);
        VerdictReport r = run_trials(theorem_from_string(theorem), cfg);
        py::dict d;
        d["theorem"] = theorem_name(r.theorem);
        d["trials"] = r.trials;
        d["passes"] = r.passes;
        d["failures"] = r.failures;
        d["skipped"] = r.skipped;
        d["collapse_hits"] = r.collapse_hits;
        py::list vacuous;
        for (GenKind k : r.vacuous_kinds) vacuous.append(gen_kind_name(k));
        d["vacuous_kinds"] = vacuous;
        py::list ces;
        for (const Counterexample& ce : r.counterexamples) {
          py::dict c;
          c["kind"] = gen_kind_name(ce.spec.kind);
          c["dim"] = ce.spec.dim;
          c["seed"] = ce.spec.seed;
          c["detail"] = ce.detail;
          c["residual"] = ce.residual;
          ces.append(c);
        }
        d["counterexamples"] = ces;
        return d;
      },
      py::arg("theorem"), py::arg("dims") = std::vector<Index>{2, 3, 4, 5},
      py::arg("trials") = 100, py::arg("seed") = 42,
      py::arg("atol") = def.atol, py::arg("rtol") = def.rtol,
      py::arg("rank_factor") = def.rank_factor,
      "Randomized structural check; returns the aggregated verdict.");
}
