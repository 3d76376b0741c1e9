#pragma once

#include <string>

#include "selmer/curve.hpp"
#include "selmer/cyclo.hpp"

namespace selmer {

enum class DeltaReason {
  Zero,
  GoodRamifiedTorsion,
  SplitMultTameSymbol,
  SplitMultInertTamagawa,
  OrdinaryAnomalousRamified,
  SupersingularPDividesM,
  GeneralSupersingularBounds,
};

/// Stable machine-readable name, e.g. "SplitMultTameSymbol".
std::string to_string(DeltaReason reason);

/// One cell of the local table: delta_v lies in [lo, hi].
struct DeltaContribution {
  PlaceK place;
  ReductionType reduction;
  BehaviorKind behavior = BehaviorKind::Split;
  std::optional<int> t;
  int lo = 0;
  int hi = 0;
  DeltaReason reason = DeltaReason::Zero;
  bool archimedean = false;
};

/// Data for u_{ell,m} = d^n (a/b)^s with j = ell^(-n) a/b and m = ell^s d.
struct UnitSymbolInput {
  u64 ell = 0;
  int n = 0;
  Int a, b;
  int s = 0;
  Int d;
};

UnitSymbolInput unit_symbol_input(const CurveQ& E, u64 ell, i64 m);

DeltaContribution delta_good_away_from_p(int dimtors, const SplitBehavior& behavior);

/// u^((q_v - 1)/p) == 1 in the residue field of v.
bool compute_unit_symbol(const UnitSymbolInput& inp, const PlaceK& v, u64 p);

DeltaContribution delta_split_mult(const UnitSymbolInput& inp, int c_v, const SplitBehavior& behavior,
                                   const PlaceK& v, u64 p);
DeltaContribution delta_nonsplit_mult(const SplitBehavior& behavior);
DeltaContribution delta_ordinary_at_p(bool anomalous, const SplitBehavior& behavior);

/// Exact norm cokernel at a supersingular place above p in L_m/K when p | m.
int supersingular_cokernel_dim(u64 p);

DeltaContribution delta_supersingular_Lm(u64 p, i64 m, const SplitBehavior& behavior);

/// Interval for a supersingular place with jump t_w, residue degree f_v and
/// local degree deg = [K_v : Q_p].
DeltaContribution delta_supersingular_general(int t_w, int f_v, int deg);

}  // namespace selmer
