#pragma once

#include <utility>

#include "meanx/polar.hpp"
#include "meanx/types.hpp"

namespace meanx {

/// One polar decomposition shared by the three transforms of the same input.
struct TransformBundle {
  PolarParts parts;
  CMatrix mean;
  CMatrix duggal;
  CMatrix aluthge;
};

/// M(T) = (T + P V) / 2 where T = V P.
CMatrix mean_transform(const CMatrix& t, const ToleranceContext& tol = {});

/// Duggal transform P V.
CMatrix duggal_transform(const CMatrix& t, const ToleranceContext& tol = {});

/// Aluthge transform P^{1/2} V P^{1/2}.
CMatrix aluthge_transform(const CMatrix& t, const ToleranceContext& tol = {});

TransformBundle transform_bundle(const CMatrix& t,
                                 const ToleranceContext& tol = {});

/// Polar parts of M(T) computed in closed form: (V, (P + V* P V)/2).
/// Requires Ker(T*) ⊆ Ker(T); throws KernelConditionError otherwise.
PolarParts mean_polar_parts(const CMatrix& t, const ToleranceContext& tol = {});

/// (|PV|, |(PV)*|) = (V* P V, P) for the Duggal transform of T, under the
/// same kernel condition as mean_polar_parts.
std::pair<CMatrix, CMatrix> duggal_moduli(const CMatrix& t,
                                          const ToleranceContext& tol = {});

}  // namespace meanx
