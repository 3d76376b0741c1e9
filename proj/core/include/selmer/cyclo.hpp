#pragma once

#include <optional>
#include <string>

#include "selmer/arith.hpp"

namespace selmer {

/// A prime of K = Q(zeta_p) above the rational prime ell. All g conjugate
/// places share the same local data.
struct PlaceK {
  u64 ell = 0;  // 0 marks an archimedean place
  int e_v = 1;
  int f_v = 1;
  int g = 1;
  Int q_v = 1;
};

PlaceK place_over(u64 ell, u64 p);

enum class BehaviorKind { Split, Inert, Ramified };

/// Which rule decided the behaviour; diagnostics only.
enum class BehaviorBranch {
  Archimedean,
  Tame,           // ell != p, ell | m
  PowerResidue,   // ell != p, ell does not divide m
  WildPDividesM,  // ell = p, p | m
  WildJumpOne,    // ell = p, p does not divide m, m^(p-1) != 1 mod p^2
  UnramifiedAtP,  // ell = p, m^(p-1) = 1 mod p^2
};

struct SplitBehavior {
  BehaviorKind kind = BehaviorKind::Split;
  std::optional<int> t;  // ramification jump, only for ramified places above p
  BehaviorBranch branch = BehaviorBranch::PowerResidue;
};

std::string to_string(BehaviorKind kind);
std::string to_string(BehaviorBranch branch);

struct NormalizedM {
  i64 m = 0;
  Factorization<u64> removed;  // (q, k): q^(p k) was divided out
};

/// Strips p-th powers from m. Throws DegenerateExtension when m is a p-th power.
NormalizedM normalize_m(i64 m, u64 p);

/// Behaviour of v in L_m = K(m^(1/p)); m must be p-th power free.
SplitBehavior behavior_in_Lm(const PlaceK& v, i64 m, u64 p);

/// Jump of K(m^(1/p))/K at the prime above p when p | m.
inline int wild_jump(u64 p) { return static_cast<int>(p); }

}  // namespace selmer
