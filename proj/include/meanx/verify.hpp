#pragma once

#include <map>
#include <string>
#include <vector>

#include "meanx/generators.hpp"
#include "meanx/types.hpp"

namespace meanx {

enum class TheoremId {
  P2_1_KERNELS,
  P2_2_MEAN_POLAR,
  L2_3_DUGGAL_MODULI,
  T2_4_SEMIHYPO_CHAIN,
  T2_5_SEMICOHYPO_CHAIN,
  T2_6_COHYPO_BINORMAL,
  P3_2_AJ_INCLUSION,
  T4_1_SELFADJOINT,
  T4_2_NORMAL,
  C4_3_NORMAL_COROLLARY,
  T4_4_POSITIVE,
  T4_5_UNITARY,
  T5_1_NILPOTENT,
  X4_SELFADJOINT_COUNTEREX,
  X4_UNITARY_COUNTEREX,
};

enum class CheckStatus { PASS, FAIL, SKIPPED };

/// Result of checking one statement instance on one matrix. `detail` names
/// the violated implication / sub-check on FAIL and the unmet hypothesis on
/// SKIPPED. `collapse_checked` marks trials whose hypothesis side held so
/// the finite-dimensional normality collapse was actually asserted.
struct CheckResult {
  CheckStatus status = CheckStatus::PASS;
  std::string detail;
  double residual = 0.0;
  bool collapse_checked = false;
};

struct Counterexample {
  GenSpec spec;
  std::string detail;
  double residual = 0.0;
};

struct EnsembleStats {
  GenKind kind = GenKind::GINIBRE;
  long trials = 0;
  long passes = 0;
  long failures = 0;
  long skipped = 0;
};

struct VerdictReport {
  TheoremId theorem = TheoremId::P2_1_KERNELS;
  long trials = 0;
  long passes = 0;
  long failures = 0;
  long skipped = 0;
  long collapse_hits = 0;
  std::vector<EnsembleStats> per_kind;
  std::vector<GenKind> vacuous_kinds;  // every trial of the kind skipped
  std::vector<Counterexample> counterexamples;
  /// Wall-clock diagnostics; deliberately excluded from serialized reports
  /// so identical runs emit identical bytes.
  double elapsed_seconds = 0.0;
};

struct RunConfig {
  std::vector<Index> dims = {2, 3, 4, 5};
  long trials = 100;
  std::uint64_t seed = 42;
  ToleranceContext tol;
  /// Per-statement tolerance overrides; anything absent inherits `tol`.
  std::map<TheoremId, ToleranceContext> overrides;
  std::size_t max_counterexamples = 8;
};

/// Evaluate one statement on one concrete matrix.
CheckResult check_theorem(TheoremId id, const CMatrix& t,
                          const ToleranceContext& tol = {});

/// Seeded ensemble sweep for one statement. The two COUNTEREX statements run
/// exactly one trial on their designated fixed matrix.
VerdictReport run_trials(TheoremId id, const RunConfig& config);

std::vector<VerdictReport> run_all(const RunConfig& config);

/// Ensembles a statement is swept over by default; chosen so no default
/// (statement, kind) pair is vacuous (hypothesis-dense kinds for guarded
/// statements).
std::vector<GenKind> default_ensembles(TheoremId id);

/// Fixed matrix behind the COUNTEREX statements.
CMatrix counterexample_matrix(TheoremId id);

std::vector<TheoremId> all_theorems();
std::string theorem_name(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

}  // namespace meanx
