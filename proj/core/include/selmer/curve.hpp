#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "selmer/arith.hpp"

namespace selmer {

/// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
/// assumed globally minimal, with its standard invariants.
struct CurveQ {
  Int a1, a2, a3, a4, a6;
  Int b2, b4, b6, b8;
  Int c4, c6, disc;
  Int j_num, j_den;  // j = j_num / j_den, gcd = 1, j_den > 0
  std::vector<u64> bad_primes;  // primes dividing disc, increasing

  std::array<Int, 5> a_invariants() const { return {a1, a2, a3, a4, a6}; }
  bool has_good_reduction(u64 ell) const { return mod_small(disc, ell) != 0; }
};

CurveQ derive_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4, const Int& a6);
CurveQ derive_invariants(const std::array<Int, 5>& a);

enum class ReductionKind { Good, SplitMult, NonsplitMult };
enum class GoodKind { Ordinary, Supersingular };

std::string to_string(ReductionKind kind);
std::string to_string(GoodKind kind);

struct ReductionType {
  ReductionKind kind = ReductionKind::Good;
  std::optional<GoodKind> sub;  // only for places above p
  int ord_j = 0;                // ord_v(j); negative for multiplicative, 0 if j = 0

  bool multiplicative() const { return kind != ReductionKind::Good; }
  /// Tamagawa number of a split multiplicative place, -ord_v(j).
  int tamagawa() const { return -ord_j; }
};

struct FrobeniusData {
  u64 ell = 0;
  i64 a_ell = 0;
  Int q;  // ell^f

  /// s_f with s_0 = 2, s_1 = a_ell, s_k = a_ell s_{k-1} - ell s_{k-2}.
  Int trace_over(int f) const;
  /// #E(F_{ell^f}) = ell^f + 1 - s_f.
  Int points_over(int f) const;
};

struct BadPrimeReport {
  u64 ell;
  bool multiplicative;
};

struct HypothesisReport {
  std::vector<BadPrimeReport> bad_primes;
  bool semistable = true;
  bool good_at_p = true;
};

/// Non-throwing hypothesis evaluation.
HypothesisReport assess_hypotheses(const CurveQ& E, u64 p);
/// Throws NotSemistable or BadAtP when a hypothesis fails.
HypothesisReport check_hypotheses(const CurveQ& E, u64 p);

/// Reduction type over the completion of Q(zeta_p) above ell with residue
/// degree f (split/nonsplit is decided over that completion).
ReductionType reduction_at(const CurveQ& E, u64 ell, int f);

/// Split multiplicative over Q_ell, via the tangent cone at the node.
bool is_split_over_q(const CurveQ& E, u64 ell);

inline constexpr u64 kDefaultEnumerationBound = 1'000'000;

/// a_ell by exhaustive enumeration over F_ell.
FrobeniusData trace_of_frobenius(const CurveQ& E, u64 ell, u64 bound = kDefaultEnumerationBound);

GoodKind ordinary_or_supersingular(const CurveQ& E, u64 p);

/// Memo table ell -> a_ell for one curve; safe to share between threads.
class FrobeniusCache {
 public:
  explicit FrobeniusCache(const CurveQ& E, u64 bound = kDefaultEnumerationBound) : E_(E), bound_(bound) {}

  i64 a_ell(u64 ell) const;
  const CurveQ& curve() const { return E_; }

 private:
  CurveQ E_;
  u64 bound_;
  mutable std::shared_mutex mu_;
  mutable std::map<u64, i64> table_;
};

inline const std::set<u64>& default_torsion_primes() {
  static const std::set<u64> s{3, 5, 7};
  return s;
}

/// dim_{F_p} E~(F_{ell^f})[p] via the characteristic polynomial of Frobenius
/// on E[p], with a division-polynomial scalarity test in the repeated-root case.
int torsion_dimension(const CurveQ& E, u64 ell, int f, u64 p, const FrobeniusCache* cache = nullptr,
                      const std::set<u64>& supported = default_torsion_primes());

}  // namespace selmer
