#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meanx/types.hpp"

namespace meanx {

/// splitmix64: the state advances by the golden-gamma constant
/// 0x9E3779B97F4A7C15 per draw and the output is a fixed xor-shift-multiply
/// finalizer of the new state. Chosen over std:: distributions because its
/// entire output sequence is pinned by the algorithm, not the standard
/// library, so seeded ensembles are bit-identical everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (one value per call; the cosine branch).
  double gaussian();

  /// Standard complex normal: variance 1 overall, independent re/im parts.
  Complex complex_gaussian();

 private:
  std::uint64_t state_;
};

enum class GenKind {
  GINIBRE,
  UNITARY,
  NORMAL,
  POSITIVE,
  PARTIAL_ISOMETRY,
  BINORMAL_WEIGHTED_PERM,
  SQUARE_ZERO,
  SINGULAR,
  OPPOSITE_FREE_UNITARY,
  SHIFT_LIKE,
};

/// Recipe for one deterministic matrix: (kind, dim, seed) plus kind-specific
/// parameters. Negative rank/a/b mean "derive from the seed".
struct GenSpec {
  GenKind kind = GenKind::GINIBRE;
  Index dim = 2;
  std::uint64_t seed = 0;
  Index rank = -1;   // PARTIAL_ISOMETRY / SINGULAR
  double a = -1.0;   // SHIFT_LIKE lower weight
  double b = -1.0;   // SHIFT_LIKE upper weight
  bool ridge = false;  // POSITIVE: add a small multiple of I
};

/// Deterministic: identical specs yield bit-identical matrices.
CMatrix generate(const GenSpec& spec);

std::string gen_kind_name(GenKind kind);
GenKind gen_kind_from_string(const std::string& name);
std::vector<GenKind> all_gen_kinds();

}  // namespace meanx
