#pragma once

#include <functional>
#include <string>
#include <vector>

#include "selmer/curve.hpp"
#include "selmer/cyclo.hpp"
#include "selmer/local_delta.hpp"

namespace selmer {

enum class Verdict { Trivial, Nontrivial, Undetermined };
std::string to_string(Verdict v);

struct Hypotheses {
  bool semistable = false;
  bool good_at_p = false;
  bool selmer_trivial_over_K = false;  // asserted by the caller, never checked
};

struct SelmerReport {
  std::string curve_id;
  u64 p = 0;
  i64 m_input = 0;
  i64 m = 0;  // p-th power free
  Hypotheses hypotheses;
  std::vector<DeltaContribution> contributions;
  int total_lo = 0;
  int total_hi = 0;
  Verdict verdict = Verdict::Undetermined;

  /// The formula only applies when every hypothesis flag is set.
  bool verdict_valid() const {
    return hypotheses.semistable && hypotheses.good_at_p && hypotheses.selmer_trivial_over_K;
  }
};

struct PlaceBehavior {
  PlaceK place;
  SplitBehavior behavior;
};

/// Finite places that can contribute: those above p, above primes dividing m
/// and above bad primes. One entry per place of K, ordered by ell.
std::vector<PlaceBehavior> contributing_places(const CurveQ& E, u64 p, i64 m);

Verdict verdict_for(int lo, int hi);

/// Full local-global evaluation for L_m. Throws HypothesisFailure when E is not
/// semistable or has bad reduction at p, DegenerateExtension when L_m = K.
SelmerReport selmer_dimension(const CurveQ& E, u64 p, i64 m, bool assert_selmer_trivial,
                              const FrobeniusCache* cache = nullptr, const std::string& curve_id = "");

inline constexpr i64 kMaxScanRange = 100'000;

using ReportPredicate = std::function<bool(const SelmerReport&)>;

/// Reports for every p-th power free m in [lo, hi] accepted by pred, in
/// increasing m. Work is spread over `threads` workers (0 = hardware).
std::vector<SelmerReport> scan_m(const CurveQ& E, u64 p, i64 lo, i64 hi, const ReportPredicate& pred,
                                 bool assert_selmer_trivial, const std::string& curve_id = "",
                                 unsigned threads = 0);

}  // namespace selmer
