#include "selmer/local_delta.hpp"

#include <algorithm>

#include "selmer/error.hpp"

namespace selmer {

std::string to_string(DeltaReason reason) {
  switch (reason) {
    case DeltaReason::Zero: return "Zero";
    case DeltaReason::GoodRamifiedTorsion: return "GoodRamifiedTorsion";
    case DeltaReason::SplitMultTameSymbol: return "SplitMultTameSymbol";
    case DeltaReason::SplitMultInertTamagawa: return "SplitMultInertTamagawa";
    case DeltaReason::OrdinaryAnomalousRamified: return "OrdinaryAnomalousRamified";
    case DeltaReason::SupersingularPDividesM: return "SupersingularPDividesM";
    case DeltaReason::GeneralSupersingularBounds: return "GeneralSupersingularBounds";
  }
  return "?";
}

namespace {

DeltaContribution cell(const SplitBehavior& b, int lo, int hi, DeltaReason reason) {
  DeltaContribution c;
  c.behavior = b.kind;
  c.t = b.t;
  c.lo = lo;
  c.hi = hi;
  c.reason = reason;
  return c;
}

DeltaContribution zero(const SplitBehavior& b) { return cell(b, 0, 0, DeltaReason::Zero); }

}  // namespace

UnitSymbolInput unit_symbol_input(const CurveQ& E, u64 ell, i64 m) {
  UnitSymbolInput in;
  in.ell = ell;
  const int vn = E.j_num == 0 ? 0 : valuation(E.j_num, ell);
  const int vd = valuation(E.j_den, ell);
  in.n = vd - vn;
  if (in.n < 1) throw Error(ErrorCode::InvalidArgument, "j is integral at " + std::to_string(ell));
  in.a = E.j_num;
  in.b = E.j_den / ipow(Int(ell), static_cast<unsigned>(vd));
  in.s = valuation(m, ell);
  in.d = Int(m) / ipow(Int(ell), static_cast<unsigned>(in.s));
  return in;
}

DeltaContribution delta_good_away_from_p(int dimtors, const SplitBehavior& behavior) {
  if (dimtors < 0 || dimtors > 2) throw Error(ErrorCode::InvalidArgument, "torsion dimension out of range");
  if (behavior.kind != BehaviorKind::Ramified) return zero(behavior);
  return cell(behavior, dimtors, dimtors, DeltaReason::GoodRamifiedTorsion);
}

// The sign (-1)^(sn) in the Tate parameter is a p-th power for odd p and is dropped.
bool compute_unit_symbol(const UnitSymbolInput& inp, const PlaceK& v, u64 p) {
  const u64 ell = inp.ell;
  if (ell == p || ell != v.ell) throw Error(ErrorCode::InvalidArgument, "unit symbol needs ell = v.ell != p");
  const u64 bm = mod_small(inp.b, ell);
  if (bm == 0) throw Error(ErrorCode::DivisionByEll, "b is divisible by " + std::to_string(ell));
  const u64 am = mod_small(inp.a, ell), dm = mod_small(inp.d, ell);
  if (am == 0 || dm == 0) throw Error(ErrorCode::InvalidArgument, "a and d must be units at " + std::to_string(ell));
  const u64 ratio = mulmod(am, static_cast<u64>(invmod(static_cast<i64>(bm), static_cast<i64>(ell))), ell);
  const u64 u = mulmod(powmod(dm, static_cast<u64>(inp.n), ell), powmod(ratio, static_cast<u64>(inp.s), ell), ell);
  Int e = ((v.q_v - 1) / p) % (ell - 1);
  return powmod(u, e.convert_to<u64>(), ell) == 1;
}

DeltaContribution delta_split_mult(const UnitSymbolInput& inp, int c_v, const SplitBehavior& behavior,
                                   const PlaceK& v, u64 p) {
  switch (behavior.kind) {
    case BehaviorKind::Ramified: {
      const int d = compute_unit_symbol(inp, v, p) ? 1 : 0;
      return cell(behavior, d, d, DeltaReason::SplitMultTameSymbol);
    }
    case BehaviorKind::Inert: {
      const int d = c_v % static_cast<int>(p) == 0 ? 1 : 0;
      return cell(behavior, d, d, DeltaReason::SplitMultInertTamagawa);
    }
    case BehaviorKind::Split: break;
  }
  return zero(behavior);
}

DeltaContribution delta_nonsplit_mult(const SplitBehavior& behavior) { return zero(behavior); }

DeltaContribution delta_ordinary_at_p(bool anomalous, const SplitBehavior& behavior) {
  if (behavior.kind == BehaviorKind::Ramified && anomalous)
    return cell(behavior, 1, 2, DeltaReason::OrdinaryAnomalousRamified);
  return zero(behavior);
}

int supersingular_cokernel_dim(u64 p) { return static_cast<int>(p) - 1; }

DeltaContribution delta_supersingular_Lm(u64 p, i64 m, const SplitBehavior& behavior) {
  if (m % static_cast<i64>(p) != 0) return zero(behavior);
  const int d = supersingular_cokernel_dim(p);
  return cell(behavior, d, d, DeltaReason::SupersingularPDividesM);
}

DeltaContribution delta_supersingular_general(int t_w, int f_v, int deg) {
  if (t_w < 1) throw Error(ErrorCode::InvalidJump, "t_w = " + std::to_string(t_w));
  if (f_v < 1 || deg < 1) throw Error(ErrorCode::InvalidArgument, "f_v and deg must be positive");
  SplitBehavior b{BehaviorKind::Ramified, t_w, BehaviorBranch::WildJumpOne};
  if (t_w == 1) return zero(b);
  return cell(b, f_v, std::min(f_v * (t_w - 1), deg + 2), DeltaReason::GeneralSupersingularBounds);
}

}  // namespace selmer
