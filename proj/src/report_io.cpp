#include "meanx/report_io.hpp"

#include <cmath>
#include <fstream>

namespace meanx {

using nlohmann::json;

namespace {

double number_at(const json& j, const char* what) {
  if (!j.is_number()) {
    throw InvalidSpecError(std::string("expected a number for ") + what);
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) {
    throw InvalidSpecError(std::string("non-finite value for ") + what);
  }
  return x;
}

Index dim_of(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("data")) {
    throw InvalidSpecError("expected an object with \"n\" and \"data\"");
  }
  if (!j["n"].is_number_integer()) {
    throw InvalidSpecError("\"n\" must be an integer");
  }
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > 4096) {
    throw InvalidSpecError("\"n\" out of range");
  }
  return static_cast<Index>(n);
}

json parsed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpecError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidSpecError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

Complex parse_complex_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidSpecError("complex entries must be [re, im] pairs");
  }
  return Complex(number_at(j[0], "real part"), number_at(j[1], "imag part"));
}

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

CMatrix parse_matrix_json(const json& j) {
  const Index n = dim_of(j);
  const json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != n) {
    throw InvalidSpecError("\"data\" must hold exactly n rows");
  }
  CMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const json& row = data[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw InvalidSpecError("each row must hold exactly n entries");
    }
    for (Index c = 0; c < n; ++c) {
      m(r, c) = parse_complex_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

CMatrix load_matrix_file(const std::string& path) {
  return parse_matrix_json(parsed_file(path));
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"data", std::move(rows)}};
}

CVector parse_vector_json(const json& j) {
  const Index n = dim_of(j);
  const json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != n) {
    throw InvalidSpecError("\"data\" must hold exactly n entries");
  }
  CVector v(n);
  for (Index r = 0; r < n; ++r) {
    v(r) = parse_complex_json(data[static_cast<std::size_t>(r)]);
  }
  return v;
}

CVector load_vector_file(const std::string& path) {
  return parse_vector_json(parsed_file(path));
}

json vector_to_json(const CVector& v) {
  json data = json::array();
  for (Index r = 0; r < v.size(); ++r) data.push_back(complex_to_json(v(r)));
  return json{{"n", v.size()}, {"data", std::move(data)}};
}

json tolerance_to_json(const ToleranceContext& tol) {
  return json{{"atol", tol.atol},
              {"rtol", tol.rtol},
              {"rank_factor", tol.rank_factor}};
}

json polar_to_json(const PolarParts& parts) {
  return json{{"partial_isometry", matrix_to_json(parts.V)},
              {"modulus", matrix_to_json(parts.P)},
              {"rank", parts.rank},
              {"cutoff", parts.cutoff},
              {"spectral_gap", std::isfinite(parts.gap) ? json(parts.gap)
                                                        : json(nullptr)}};
}

json classification_to_json(const ClassificationReport& report) {
  json entries = json::array();
  for (const ClassificationEntry& e : report.entries) {
    json item{{"name", e.name}};
    if (e.verdict) {
      item["holds"] = e.verdict->holds;
      item["residual"] = e.verdict->residual;
      item["threshold"] = e.verdict->threshold;
    } else {
      item["skipped"] = e.skip_reason;
    }
    entries.push_back(std::move(item));
  }
  return json{{"classes", std::move(entries)}};
}

json joint_spectrum_to_json(const std::vector<JointSpectrumPoint>& pts) {
  json arr = json::array();
  for (const JointSpectrumPoint& p : pts) {
    arr.push_back(json{{"lambda", complex_to_json(p.lambda)},
                       {"witness", vector_to_json(p.witness)},
                       {"residual_t", p.residual_t},
                       {"residual_t_adjoint", p.residual_tstar}});
  }
  return arr;
}

json aj_inclusion_to_json(const AjInclusionReport& report) {
  json matches = json::array();
  for (const AjMatch& m : report.matches) {
    matches.push_back(json{{"lambda", complex_to_json(m.lambda)},
                           {"matched", m.matched},
                           {"nearest", complex_to_json(m.mu)},
                           {"distance", m.distance}});
  }
  return json{{"holds", report.holds},
              {"points", joint_spectrum_to_json(report.points_t)},
              {"points_mean", joint_spectrum_to_json(report.points_mean)},
              {"matches", std::move(matches)}};
}

std::string report_status(const VerdictReport& report) {
  if (report.failures > 0) return "FAIL";
  if (!report.vacuous_kinds.empty()) return "VACUOUS";
  return "PASS";
}

json verdict_report_to_json(const VerdictReport& report) {
  json per_kind = json::array();
  for (const EnsembleStats& s : report.per_kind) {
    per_kind.push_back(json{{"kind", gen_kind_name(s.kind)},
                            {"trials", s.trials},
                            {"passes", s.passes},
                            {"failures", s.failures},
                            {"skipped", s.skipped}});
  }
  json vacuous = json::array();
  for (GenKind k : report.vacuous_kinds) vacuous.push_back(gen_kind_name(k));
  json counterexamples = json::array();
  for (const Counterexample& ce : report.counterexamples) {
    counterexamples.push_back(json{{"kind", gen_kind_name(ce.spec.kind)},
                                   {"dim", ce.spec.dim},
                                   {"seed", ce.spec.seed},
                                   {"detail", ce.detail},
                                   {"residual", ce.residual}});
  }
  return json{{"theorem", theorem_name(report.theorem)},
              {"status", report_status(report)},
              {"trials", report.trials},
              {"passes", report.passes},
              {"failures", report.failures},
              {"skipped", report.skipped},
              {"collapse_hits", report.collapse_hits},
              {"per_kind", std::move(per_kind)},
              {"vacuous_kinds", std::move(vacuous)},
              {"counterexamples", std::move(counterexamples)}};
}

json report_envelope(const std::string& command, const ToleranceContext& tol,
                     json result, int exit_status) {
  return json{{"schema", 1},
              {"command", command},
              {"tolerance", tolerance_to_json(tol)},
              {"result", std::move(result)},
              {"exit_status", exit_status}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace meanx
