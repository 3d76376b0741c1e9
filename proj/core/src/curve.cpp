#include "selmer/curve.hpp"

#include <mutex>

#include "selmer/division_poly.hpp"
#include "selmer/error.hpp"
#include "selmer/fp_poly.hpp"

namespace selmer {

CurveQ derive_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4, const Int& a6) {
  CurveQ E{a1, a2, a3, a4, a6, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  E.b2 = a1 * a1 + 4 * a2;
  E.b4 = 2 * a4 + a1 * a3;
  E.b6 = a3 * a3 + 4 * a6;
  E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  E.c4 = E.b2 * E.b2 - 24 * E.b4;
  E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
  E.disc = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
  if (E.disc == 0) throw Error(ErrorCode::SingularModel, "discriminant vanishes");

  Int num = E.c4 * E.c4 * E.c4;
  Int den = E.disc;
  Int g = boost::multiprecision::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  E.j_num = num;
  E.j_den = den;

  for (const auto& [q, e] : factor(E.disc)) E.bad_primes.push_back(q.convert_to<u64>());
  return E;
}

CurveQ derive_invariants(const std::array<Int, 5>& a) { return derive_invariants(a[0], a[1], a[2], a[3], a[4]); }

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::SplitMult: return "split_multiplicative";
    case ReductionKind::NonsplitMult: return "nonsplit_multiplicative";
  }
  return "?";
}

std::string to_string(GoodKind kind) { return kind == GoodKind::Ordinary ? "ordinary" : "supersingular"; }

Int FrobeniusData::trace_over(int f) const {
  Int s_prev = 2, s = a_ell;
  if (f == 0) return s_prev;
  for (int k = 2; k <= f; ++k) {
    Int next = a_ell * s - Int(ell) * s_prev;
    s_prev = s;
    s = next;
  }
  return s;
}

Int FrobeniusData::points_over(int f) const { return ipow(Int(ell), f) + 1 - trace_over(f); }

HypothesisReport assess_hypotheses(const CurveQ& E, u64 p) {
  HypothesisReport r;
  for (u64 ell : E.bad_primes) {
    bool mult = mod_small(E.c4, ell) != 0;
    r.bad_primes.push_back({ell, mult});
    if (!mult) r.semistable = false;
    if (ell == p) r.good_at_p = false;
  }
  return r;
}

HypothesisReport check_hypotheses(const CurveQ& E, u64 p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  HypothesisReport r = assess_hypotheses(E, p);
  for (const auto& b : r.bad_primes) {
    if (!b.multiplicative) throw Error(ErrorCode::NotSemistable, "additive reduction at " + std::to_string(b.ell));
  }
  if (!r.good_at_p) throw Error(ErrorCode::BadAtP, "bad reduction at p = " + std::to_string(p));
  return r;
}

namespace {

i64 reduce(const Int& v, u64 ell) { return static_cast<i64>(mod_small(v, ell)); }

bool is_nonzero_square(u64 a, u64 ell) {
  a %= ell;
  return a != 0 && powmod(a, (ell - 1) / 2, ell) == 1;
}

}  // namespace

bool is_split_over_q(const CurveQ& E, u64 ell) {
  if (E.has_good_reduction(ell)) throw Error(ErrorCode::InvalidArgument, "good reduction at " + std::to_string(ell));
  if (mod_small(E.c4, ell) == 0) throw Error(ErrorCode::AdditiveReduction, "additive at " + std::to_string(ell));

  if (ell == 2) {
    // Locate the singular point on the reduction, then factor the tangent
    // cone Y^2 + a1 XY + (x0 + a2) X^2 over F_2.
    const i64 a1 = reduce(E.a1, 2), a2 = reduce(E.a2, 2), a3 = reduce(E.a3, 2), a4 = reduce(E.a4, 2),
              a6 = reduce(E.a6, 2);
    for (i64 x = 0; x < 2; ++x) {
      for (i64 y = 0; y < 2; ++y) {
        i64 F = (y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) % 2;
        i64 Fx = (a1 * y + x * x + a4) % 2;
        i64 Fy = (a1 * x + a3) % 2;
        if (F == 0 && Fx == 0 && Fy == 0) {
          if (a1 == 0) throw Error(ErrorCode::AdditiveReduction, "cusp at 2");
          return (x + a2) % 2 == 0;
        }
      }
    }
    throw Error(ErrorCode::InvalidArgument, "no singular point found mod 2");
  }

  // Odd ell: y' = 2y + a1 x + a3 gives y'^2 = g(x); the node sits at the
  // double root x0 of g and the tangent cone is y'^2 = (12 x0 + b2) X^2.
  FpPoly g(ell, {reduce(E.b6, ell), reduce(2 * E.b4, ell), reduce(E.b2, ell), 4});
  FpPoly d = gcd(g, g.derivative());
  if (d.degree() != 1) throw Error(ErrorCode::AdditiveReduction, "no simple node at " + std::to_string(ell));
  u64 x0 = (ell - d[0]) % ell;
  u64 cone = (mulmod(12 % ell, x0, ell) + reduce(E.b2, ell)) % ell;
  if (cone == 0) throw Error(ErrorCode::AdditiveReduction, "cusp at " + std::to_string(ell));
  return is_nonzero_square(cone, ell);
}

ReductionType reduction_at(const CurveQ& E, u64 ell, int f) {
  ReductionType r;
  if (E.j_num != 0) r.ord_j = valuation(E.j_num, ell) - valuation(E.j_den, ell);
  if (E.has_good_reduction(ell)) {
    r.kind = ReductionKind::Good;
    return r;
  }
  if (mod_small(E.c4, ell) == 0) throw Error(ErrorCode::AdditiveReduction, "additive at " + std::to_string(ell));
  bool split = is_split_over_q(E, ell) || f % 2 == 0;
  r.kind = split ? ReductionKind::SplitMult : ReductionKind::NonsplitMult;
  return r;
}

FrobeniusData trace_of_frobenius(const CurveQ& E, u64 ell, u64 bound) {
  if (ell > bound) throw Error(ErrorCode::EnumerationBoundExceeded, std::to_string(ell) + " > " + std::to_string(bound));
  if (!E.has_good_reduction(ell)) throw Error(ErrorCode::BadReduction, "bad reduction at " + std::to_string(ell));

  i64 a = 0;
  if (ell == 2) {
    const i64 a1 = reduce(E.a1, 2), a2 = reduce(E.a2, 2), a3 = reduce(E.a3, 2), a4 = reduce(E.a4, 2),
              a6 = reduce(E.a6, 2);
    i64 count = 1;
    for (i64 x = 0; x < 2; ++x)
      for (i64 y = 0; y < 2; ++y)
        if ((y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) % 2 == 0) ++count;
    a = 3 - count;
  } else {
    std::vector<bool> square(ell, false);
    for (u64 y = 1; y <= ell / 2; ++y) square[mulmod(y, y, ell)] = true;
    const u64 b2 = reduce(E.b2, ell), b4 = reduce(2 * E.b4, ell), b6 = reduce(E.b6, ell);
    i64 sum = 0;
    for (u64 x = 0; x < ell; ++x) {
      u64 v = (mulmod(mulmod((4 * x + b2) % ell, x, ell) + b4, x, ell) + b6) % ell;
      if (v != 0) sum += square[v] ? 1 : -1;
    }
    a = -sum;
  }
  if (Int(a) * a > 4 * Int(ell)) throw Error(ErrorCode::InvalidArgument, "Hasse bound violated");
  return {ell, a, Int(ell)};
}

GoodKind ordinary_or_supersingular(const CurveQ& E, u64 p) {
  if (!E.has_good_reduction(p)) throw Error(ErrorCode::BadAtP, "bad reduction at p = " + std::to_string(p));
  i64 a = trace_of_frobenius(E, p).a_ell;
  return mod(a, static_cast<i64>(p)) == 0 ? GoodKind::Supersingular : GoodKind::Ordinary;
}

i64 FrobeniusCache::a_ell(u64 ell) const {
  {
    std::shared_lock lock(mu_);
    if (auto it = table_.find(ell); it != table_.end()) return it->second;
  }
  i64 a = trace_of_frobenius(E_, ell, bound_).a_ell;
  std::unique_lock lock(mu_);
  table_.emplace(ell, a);
  return a;
}

int torsion_dimension(const CurveQ& E, u64 ell, int f, u64 p, const FrobeniusCache* cache,
                      const std::set<u64>& supported) {
  if (!supported.contains(p)) throw Error(ErrorCode::UnsupportedP, "p = " + std::to_string(p));
  if (ell == p) throw Error(ErrorCode::InvalidArgument, "torsion_dimension needs ell != p");
  if (f < 1) throw Error(ErrorCode::InvalidArgument, "f must be positive");
  if (!E.has_good_reduction(ell)) throw Error(ErrorCode::BadReduction, "bad reduction at " + std::to_string(ell));

  const i64 a = cache ? cache->a_ell(ell) : trace_of_frobenius(E, ell).a_ell;
  const i64 pp = static_cast<i64>(p);
  const i64 lmod = static_cast<i64>(ell % p);
  FpPoly chi(p, {lmod, -a, 1});
  FpPoly x_f_minus_1 = powmod(FpPoly(p, {0, 1}), Int(f), chi) - FpPoly::constant(p, 1);

  const i64 disc = mod(a * a - 4 * lmod, pp);
  if (disc == 0) {
    const u64 c = static_cast<u64>(mod(a * invmod(2, pp), pp));
    if (frobenius_is_scalar(E, ell, p, c)) return powmod(c, static_cast<u64>(f), p) == 1 ? 2 : 0;
  }
  // E[p] is a cyclic F_p[phi]-module: ker(phi^f - 1) has dimension deg gcd(x^f - 1, chi).
  FpPoly g = gcd(chi, x_f_minus_1);
  return g.is_zero() ? 2 : g.degree();
}

}  // namespace selmer
