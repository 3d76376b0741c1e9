#include "selmer/cyclo.hpp"

#include "selmer/error.hpp"

namespace selmer {

PlaceK place_over(u64 ell, u64 p) {
  if (!is_prime(p) || p < 3) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidArgument, std::to_string(ell) + " is not prime");
  PlaceK v;
  v.ell = ell;
  if (ell == p) {
    v.e_v = static_cast<int>(p - 1);
    v.q_v = Int(p);
    return v;
  }
  v.f_v = multiplicative_order(ell % p, p);
  v.g = static_cast<int>(p - 1) / v.f_v;
  v.q_v = ipow(Int(ell), static_cast<unsigned>(v.f_v));
  return v;
}

std::string to_string(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::Split: return "split";
    case BehaviorKind::Inert: return "inert";
    case BehaviorKind::Ramified: return "ramified";
  }
  return "?";
}

std::string to_string(BehaviorBranch branch) {
  switch (branch) {
    case BehaviorBranch::Archimedean: return "archimedean";
    case BehaviorBranch::Tame: return "tame";
    case BehaviorBranch::PowerResidue: return "power_residue";
    case BehaviorBranch::WildPDividesM: return "wild_p_divides_m";
    case BehaviorBranch::WildJumpOne: return "wild_jump_one";
    case BehaviorBranch::UnramifiedAtP: return "unramified_at_p";
  }
  return "?";
}

NormalizedM normalize_m(i64 m, u64 p) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
  PthPowerFree r = pth_power_free_part(m, static_cast<int>(p));
  if (r.core == 1) throw Error(ErrorCode::DegenerateExtension, std::to_string(m) + " is a perfect power of exponent p");
  return {r.core, std::move(r.removed)};
}

SplitBehavior behavior_in_Lm(const PlaceK& v, i64 m, u64 p) {
  if (m < 2 || !is_pth_power_free(m, static_cast<int>(p)))
    throw Error(ErrorCode::NotNormalized, std::to_string(m) + " is not p-th power free");
  SplitBehavior b;
  const u64 ell = v.ell;
  if (ell == 0) {
    b.branch = BehaviorBranch::Archimedean;
    return b;
  }
  if (ell != p) {
    if (m % static_cast<i64>(ell) == 0) {
      b.kind = BehaviorKind::Ramified;
      b.branch = BehaviorBranch::Tame;
      return b;
    }
    // m mod ell lies in F_ell^*, so the exponent may be reduced mod ell - 1.
    Int e = ((v.q_v - 1) / p) % (ell - 1);
    u64 r = powmod(static_cast<u64>(m) % ell, e.convert_to<u64>(), ell);
    b.kind = r == 1 ? BehaviorKind::Split : BehaviorKind::Inert;
    b.branch = BehaviorBranch::PowerResidue;
    return b;
  }
  if (m % static_cast<i64>(p) == 0) {
    b.kind = BehaviorKind::Ramified;
    b.t = wild_jump(p);
    b.branch = BehaviorBranch::WildPDividesM;
    return b;
  }
  // u = m^(p-1) is a principal unit. If v_K(u - 1) >= 2(p - 1) > p it is a
  // p-th power in K; otherwise v_K(u - 1) = p - 1 and the jump is p - (p - 1) = 1.
  const u64 p2 = p * p;
  if (powmod(static_cast<u64>(m) % p2, p - 1, p2) == 1) {
    b.kind = BehaviorKind::Split;
    b.branch = BehaviorBranch::UnramifiedAtP;
  } else {
    b.kind = BehaviorKind::Ramified;
    b.t = 1;
    b.branch = BehaviorBranch::WildJumpOne;
  }
  return b;
}

}  // namespace selmer
