#include "selmer/selmer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "selmer/error.hpp"

namespace selmer {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

Verdict verdict_for(int lo, int hi) {
  if (hi == 0) return Verdict::Trivial;
  if (lo > 0) return Verdict::Nontrivial;
  return Verdict::Undetermined;
}

std::vector<PlaceBehavior> contributing_places(const CurveQ& E, u64 p, i64 m) {
  std::set<u64> primes(E.bad_primes.begin(), E.bad_primes.end());
  primes.insert(p);
  for (const auto& [q, e] : factor(static_cast<u64>(m))) primes.insert(q);

  std::vector<PlaceBehavior> out;
  for (u64 ell : primes) {
    PlaceK v = place_over(ell, p);
    SplitBehavior b = behavior_in_Lm(v, m, p);
    for (int i = 0; i < v.g; ++i) out.push_back({v, b});
  }
  return out;
}

namespace {

DeltaContribution evaluate_place(const CurveQ& E, u64 p, i64 m, const PlaceBehavior& pb, const FrobeniusCache& cache) {
  const PlaceK& v = pb.place;
  const SplitBehavior& b = pb.behavior;
  DeltaContribution c;
  ReductionType red = reduction_at(E, v.ell, v.f_v);

  if (v.ell == p) {
    const i64 ap = cache.a_ell(p);
    red.sub = mod(ap, static_cast<i64>(p)) == 0 ? GoodKind::Supersingular : GoodKind::Ordinary;
    if (*red.sub == GoodKind::Supersingular) {
      c = delta_supersingular_Lm(p, m, b);
    } else {
      // #E(F_p) = p + 1 - a_p, so p-torsion exists iff a_p = 1 mod p.
      c = delta_ordinary_at_p(mod(ap, static_cast<i64>(p)) == 1, b);
    }
  } else if (red.kind == ReductionKind::Good) {
    const int dim = b.kind == BehaviorKind::Ramified ? torsion_dimension(E, v.ell, v.f_v, p, &cache) : 0;
    c = delta_good_away_from_p(dim, b);
  } else if (red.kind == ReductionKind::SplitMult) {
    c = delta_split_mult(unit_symbol_input(E, v.ell, m), red.tamagawa(), b, v, p);
  } else {
    c = delta_nonsplit_mult(b);
  }
  c.place = v;
  c.reduction = red;
  return c;
}

}  // namespace

SelmerReport selmer_dimension(const CurveQ& E, u64 p, i64 m, bool assert_selmer_trivial,
                              const FrobeniusCache* cache, const std::string& curve_id) {
  SelmerReport r;
  r.curve_id = curve_id;
  r.p = p;
  r.m_input = m;
  try {
    check_hypotheses(E, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::HypothesisFailure, e.what());
  }
  r.hypotheses = {true, true, assert_selmer_trivial};
  r.m = normalize_m(m, p).m;

  std::optional<FrobeniusCache> local;
  if (!cache) cache = &local.emplace(E);

  for (const PlaceBehavior& pb : contributing_places(E, p, r.m)) {
    DeltaContribution c = evaluate_place(E, p, r.m, pb, *cache);
    r.total_lo += c.lo;
    r.total_hi += c.hi;
    r.contributions.push_back(std::move(c));
  }
  // K is totally complex: (p - 1)/2 archimedean places, each contributing 0.
  for (u64 i = 0; i < (p - 1) / 2; ++i) {
    DeltaContribution c;
    c.archimedean = true;
    c.place.ell = 0;
    c.place.f_v = 1;
    c.place.g = static_cast<int>((p - 1) / 2);
    c.place.q_v = 0;
    r.contributions.push_back(c);
  }
  r.verdict = verdict_for(r.total_lo, r.total_hi);
  return r;
}

std::vector<SelmerReport> scan_m(const CurveQ& E, u64 p, i64 lo, i64 hi, const ReportPredicate& pred,
                                 bool assert_selmer_trivial, const std::string& curve_id, unsigned threads) {
  if (hi < lo) return {};
  if (hi - lo + 1 > kMaxScanRange)
    throw Error(ErrorCode::RangeTooLarge, std::to_string(hi - lo + 1) + " values requested");
  lo = std::max<i64>(lo, 2);
  if (hi < lo) return {};
  try {
    check_hypotheses(E, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::HypothesisFailure, e.what());
  }

  const FrobeniusCache cache(E);
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::optional<SelmerReport>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const i64 m = lo + static_cast<i64>(i);
      if (!is_pth_power_free(m, static_cast<int>(p))) continue;
      try {
        SelmerReport r = selmer_dimension(E, p, m, assert_selmer_trivial, &cache, curve_id);
        if (!pred || pred(r)) slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SelmerReport> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace selmer
