#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meanx/classify.hpp"
#include "meanx/inverse_solve.hpp"
#include "meanx/polar.hpp"
#include "meanx/report_io.hpp"
#include "meanx/spectra.hpp"
#include "meanx/transforms.hpp"
#include "meanx/verify.hpp"

namespace {

using meanx::CMatrix;
using meanx::Complex;
using meanx::CVector;
using meanx::Index;
using meanx::ToleranceContext;
using nlohmann::json;

const char* kernel_relation_name(meanx::KernelRelation rel) {
  switch (rel) {
    case meanx::KernelRelation::EQUAL: return "equal";
    case meanx::KernelRelation::KER_T_IN_KER_TSTAR:
      return "ker_t_in_ker_t_adjoint";
    case meanx::KernelRelation::KER_TSTAR_IN_KER_T:
      return "ker_t_adjoint_in_ker_t";
    case meanx::KernelRelation::NONE: return "none";
  }
  return "none";
}

Complex parse_complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Complex(re, 0.0);
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return Complex(re, im);
  } catch (const std::exception&) {
    throw meanx::InvalidSpecError("cannot parse complex value '" + text +
                                  "' (expected RE or RE,IM)");
  }
}

void emit(const std::string& command, const ToleranceContext& tol,
          json result, int code) {
  std::cout << meanx::dump_report(
      meanx::report_envelope(command, tol, std::move(result), code));
}

int run_polar(const std::string& path, const ToleranceContext& tol) {
  const CMatrix t = meanx::load_matrix_file(path);
  meanx::PolarParts parts = meanx::polar_decompose(t, tol);
  json result = meanx::polar_to_json(parts);
  result["kernel_relation"] =
      kernel_relation_name(meanx::kernel_relation(t, tol));
  emit("polar", tol, std::move(result), 0);
  return 0;
}

int run_transform(const std::string& path, const std::string& kind,
                  const ToleranceContext& tol) {
  const CMatrix t = meanx::load_matrix_file(path);
  json result;
  if (kind == "all") {
    meanx::TransformBundle bundle = meanx::transform_bundle(t, tol);
    result = json{{"mean", meanx::matrix_to_json(bundle.mean)},
                  {"duggal", meanx::matrix_to_json(bundle.duggal)},
                  {"aluthge", meanx::matrix_to_json(bundle.aluthge)},
                  {"polar", meanx::polar_to_json(bundle.parts)}};
  } else {
    CMatrix out;
    if (kind == "mean") {
      out = meanx::mean_transform(t, tol);
    } else if (kind == "duggal") {
      out = meanx::duggal_transform(t, tol);
    } else if (kind == "aluthge") {
      out = meanx::aluthge_transform(t, tol);
    } else {
      throw meanx::InvalidSpecError("unknown transform kind: " + kind);
    }
    result = json{{"kind", kind}, {"matrix", meanx::matrix_to_json(out)}};
  }
  emit("transform", tol, std::move(result), 0);
  return 0;
}

int run_classify(const std::string& path, const ToleranceContext& tol) {
  const CMatrix t = meanx::load_matrix_file(path);
  emit("classify", tol, meanx::classification_to_json(meanx::classify_all(t, tol)),
       0);
  return 0;
}

int run_spectrum(const std::string& path, bool joint, bool aj,
                 const ToleranceContext& tol) {
  const CMatrix t = meanx::load_matrix_file(path);
  json evs = json::array();
  for (const Complex& z : meanx::eigenvalues(t)) {
    evs.push_back(meanx::complex_to_json(z));
  }
  json result{{"eigenvalues", std::move(evs)}};
  int code = 0;
  if (joint || aj) {
    result["joint_points"] =
        meanx::joint_spectrum_to_json(meanx::joint_point_spectrum(t, tol));
  }
  if (aj) {
    meanx::AjInclusionReport rep = meanx::check_aj_inclusion(t, tol);
    result["aj_inclusion"] = meanx::aj_inclusion_to_json(rep);
    if (!rep.holds) code = 1;
  }
  emit("spectrum", tol, std::move(result), code);
  return code;
}

int run_solve(const std::string& case_name, const std::string& target_path,
              const std::string& x_path, const std::string& y_path,
              const std::string& delta_text, const std::string& nu_text,
              const std::string& beta_text, const ToleranceContext& tol) {
  CMatrix target;
  meanx::MeanPreimage pre;
  json extra;

  if (case_name == "rank-one") {
    if (x_path.empty() || y_path.empty()) {
      throw meanx::InvalidSpecError("rank-one needs --x and --y vector files");
    }
    meanx::RankOneSpec spec{meanx::load_vector_file(x_path),
                            meanx::load_vector_file(y_path)};
    target = spec.x * spec.y.adjoint();
    pre = meanx::solve_rank_one(spec, tol);
  } else if (case_name == "rank-two") {
    if (delta_text.empty() || nu_text.empty()) {
      throw meanx::InvalidSpecError("rank-two needs --delta and --nu");
    }
    meanx::RankTwoNormalSpec spec;
    spec.delta = parse_complex_arg(delta_text);
    spec.nu = parse_complex_arg(nu_text);
    if (!x_path.empty() || !y_path.empty()) {
      if (x_path.empty() || y_path.empty()) {
        throw meanx::InvalidSpecError(
            "rank-two takes --x and --y together or not at all");
      }
      spec.x = meanx::load_vector_file(x_path);
      spec.y = meanx::load_vector_file(y_path);
    } else {
      spec.x = CVector::Unit(2, 0);
      spec.y = CVector::Unit(2, 1);
    }
    target = spec.delta * spec.x * spec.x.adjoint() +
             spec.nu * spec.y * spec.y.adjoint();
    pre = meanx::solve_rank_two_normal(spec, tol);
    if (pre.kind == meanx::MeanPreimage::Kind::FAMILY && !beta_text.empty()) {
      pre.solution = pre.family_evaluator(parse_complex_arg(beta_text));
      extra["beta"] = meanx::complex_to_json(parse_complex_arg(beta_text));
    }
  } else if (case_name == "square-zero") {
    if (target_path.empty()) {
      throw meanx::InvalidSpecError("square-zero needs a target matrix file");
    }
    target = meanx::load_matrix_file(target_path);
    pre = meanx::solve_square_zero(target, tol);
  } else if (case_name == "positive") {
    if (target_path.empty()) {
      throw meanx::InvalidSpecError("positive needs a target matrix file");
    }
    target = meanx::load_matrix_file(target_path);
    pre = meanx::solve_positive(target, tol);
  } else {
    throw meanx::InvalidSpecError("unknown solve case: " + case_name);
  }

  const CMatrix mean_of_solution = meanx::mean_transform(pre.solution, tol);
  const double residual =
      meanx::frobenius_norm(CMatrix(mean_of_solution - target));
  const double threshold = tol.rtol * meanx::scale_of(target);
  const int code = residual <= threshold ? 0 : 1;

  const char* kind_name = "unique";
  if (pre.kind == meanx::MeanPreimage::Kind::FAMILY) kind_name = "family";
  if (pre.kind == meanx::MeanPreimage::Kind::FIXED_POINT) {
    kind_name = "fixed_point";
  }
  json result{{"case", case_name},
              {"kind", kind_name},
              {"solution", meanx::matrix_to_json(pre.solution)},
              {"mean_of_solution", meanx::matrix_to_json(mean_of_solution)},
              {"target", meanx::matrix_to_json(target)},
              {"residual", residual},
              {"threshold", threshold}};
  if (pre.kind == meanx::MeanPreimage::Kind::FAMILY) {
    result["admissible_radius_sq"] = pre.admissible_radius_sq;
  }
  if (!pre.warning.empty()) result["warning"] = pre.warning;
  for (auto& [k, v] : extra.items()) result[k] = v;
  emit("solve", tol, std::move(result), code);
  return code;
}

int run_verify(const std::string& theorem, const std::vector<long>& dims,
               long trials, std::uint64_t seed, std::size_t max_counter,
               const ToleranceContext& tol) {
  meanx::RunConfig cfg;
  cfg.dims.clear();
  for (long d : dims) {
    if (d < 1 || d > 64) throw meanx::InvalidSpecError("--dims out of range");
    cfg.dims.push_back(static_cast<Index>(d));
  }
  if (trials < 1) throw meanx::InvalidSpecError("--trials must be positive");
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.tol = tol;
  cfg.max_counterexamples = max_counter;

  std::vector<meanx::VerdictReport> reports;
  if (theorem == "all") {
    reports = meanx::run_all(cfg);
  } else {
    reports.push_back(meanx::run_trials(meanx::theorem_from_string(theorem), cfg));
  }

  json arr = json::array();
  long failed = 0;
  long vacuous = 0;
  for (const meanx::VerdictReport& r : reports) {
    const std::string status = meanx::report_status(r);
    if (status == "FAIL") ++failed;
    if (status == "VACUOUS") ++vacuous;
    arr.push_back(meanx::verdict_report_to_json(r));
    std::fprintf(stderr,
                 "%-26s %-8s trials=%-6ld passes=%-6ld failures=%-4ld "
                 "skipped=%-5ld collapse=%-6ld [%.3fs]\n",
                 meanx::theorem_name(r.theorem).c_str(), status.c_str(),
                 r.trials, r.passes, r.failures, r.skipped, r.collapse_hits,
                 r.elapsed_seconds);
  }
  const int code = (failed > 0 || vacuous > 0) ? 1 : 0;
  json result{{"theorems", std::move(arr)},
              {"summary", json{{"checked", reports.size()},
                               {"failed", failed},
                               {"vacuous", vacuous}}}};
  emit("verify", tol, std::move(result), code);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for the mean transform of square complex "
               "matrices"};
  app.require_subcommand(1);

  ToleranceContext tol;
  std::string matrix_path;
  std::string kind = "mean";
  bool joint = false;
  bool aj = false;
  std::string case_name;
  std::string x_path, y_path, delta_text, nu_text, beta_text;
  std::string theorem = "all";
  std::vector<long> dims = {2, 3, 4, 5};
  long trials = 100;
  std::uint64_t seed = 42;
  std::size_t max_counter = 8;

  auto add_tols = [&tol](CLI::App* cmd) {
    cmd->add_option("--atol", tol.atol, "absolute tolerance");
    cmd->add_option("--rtol", tol.rtol, "relative tolerance");
    cmd->add_option("--rank-factor", tol.rank_factor,
                    "rank cutoff factor (times dim times largest singular "
                    "value)");
  };

  CLI::App* polar_cmd =
      app.add_subcommand("polar", "polar decomposition T = V|T|");
  polar_cmd->add_option("matrix", matrix_path, "matrix JSON file")->required();
  add_tols(polar_cmd);

  CLI::App* transform_cmd = app.add_subcommand(
      "transform", "mean, duggal, or aluthge transform of a matrix");
  transform_cmd->add_option("matrix", matrix_path, "matrix JSON file")
      ->required();
  transform_cmd->add_option("--kind", kind,
                            "one of: mean, duggal, aluthge, all");
  add_tols(transform_cmd);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "operator class membership report");
  classify_cmd->add_option("matrix", matrix_path, "matrix JSON file")
      ->required();
  add_tols(classify_cmd);

  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "eigenvalues, joint point spectrum, inclusion check");
  spectrum_cmd->add_option("matrix", matrix_path, "matrix JSON file")
      ->required();
  spectrum_cmd->add_flag("--joint", joint, "include the joint point spectrum");
  spectrum_cmd->add_flag(
      "--aj", aj,
      "check the joint point spectrum stays inside that of the mean "
      "transform (exit 1 when it does not)");
  add_tols(spectrum_cmd);

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "find X with mean-transform(X) equal to a structured target");
  solve_cmd
      ->add_option("--case", case_name,
                   "one of: rank-one, rank-two, square-zero, positive")
      ->required();
  solve_cmd->add_option("target", matrix_path,
                        "target matrix JSON file (square-zero, positive)");
  solve_cmd->add_option("--x", x_path, "vector JSON file");
  solve_cmd->add_option("--y", y_path, "vector JSON file");
  solve_cmd->add_option("--delta", delta_text, "complex scalar RE or RE,IM");
  solve_cmd->add_option("--nu", nu_text, "complex scalar RE or RE,IM");
  solve_cmd->add_option("--beta", beta_text,
                        "family parameter, complex scalar RE or RE,IM");
  add_tols(solve_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run randomized checks of the toolkit's structural claims");
  verify_cmd->add_option("--theorem", theorem,
                         "statement id (see README) or 'all'");
  verify_cmd->add_option("--dims", dims, "matrix sizes to sample")
      ->delimiter(',');
  verify_cmd->add_option("--trials", trials, "trials per ensemble and size");
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--max-counterexamples", max_counter,
                         "counterexamples kept per statement");
  verify_cmd->add_option("--tol-atol", tol.atol, "absolute tolerance");
  verify_cmd->add_option("--tol-rtol", tol.rtol, "relative tolerance");
  verify_cmd->add_option("--rank-factor", tol.rank_factor,
                         "rank cutoff factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(polar_cmd)) return run_polar(matrix_path, tol);
    if (app.got_subcommand(transform_cmd)) {
      return run_transform(matrix_path, kind, tol);
    }
    if (app.got_subcommand(classify_cmd)) return run_classify(matrix_path, tol);
    if (app.got_subcommand(spectrum_cmd)) {
      return run_spectrum(matrix_path, joint, aj, tol);
    }
    if (app.got_subcommand(solve_cmd)) {
      return run_solve(case_name, matrix_path, x_path, y_path, delta_text,
                       nu_text, beta_text, tol);
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(theorem, dims, trials, seed, max_counter, tol);
    }
  } catch (const meanx::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
