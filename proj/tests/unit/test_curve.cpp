#include <gtest/gtest.h>

#include "oracles.hpp"
#include "selmer/curve.hpp"
#include "selmer/division_poly.hpp"
#include "selmer/error.hpp"

using namespace selmer;

namespace {

CurveQ curve_17a1() { return derive_invariants(1, -1, 1, -1, -14); }

const std::vector<std::array<Int, 5>>& sample() {
  static const std::vector<std::array<Int, 5>> s{
      {0, -1, 1, -10, -20}, {1, 0, 1, 4, -6}, {1, 1, 1, -10, -10}, {1, -1, 1, -1, -14},
      {0, 1, 1, -9, -15},   {0, 0, 1, -1, 0},  {1, 0, 1, -1, 0},
  };
  return s;
}

}  // namespace

TEST(Curve, Invariants17a1) {
  const CurveQ E = curve_17a1();
  EXPECT_EQ(E.disc, -83521);
  EXPECT_EQ(E.j_num, -35937);
  EXPECT_EQ(E.j_den, 83521);
  EXPECT_EQ(E.disc % 17, 0);
  EXPECT_NE(E.c4 % 17, 0);
  EXPECT_EQ(E.bad_primes, std::vector<u64>{17});
}

TEST(Curve, StandardRelations) {
  for (const auto& a : sample()) {
    const CurveQ E = derive_invariants(a);
    EXPECT_EQ(E.c4 * E.c4 * E.c4 - E.c6 * E.c6, 1728 * E.disc);
    EXPECT_EQ(4 * E.b8, E.b2 * E.b6 - E.b4 * E.b4);
    EXPECT_EQ(E.j_num * E.disc, E.j_den * E.c4 * E.c4 * E.c4);
    EXPECT_GT(E.j_den, 0);
  }
}

TEST(Curve, CongruentNumberCurve) {
  const CurveQ E = derive_invariants(0, 0, 0, -1, 0);
  EXPECT_EQ(E.c4, 48);
  EXPECT_EQ(E.c6, 0);
  EXPECT_EQ(E.disc, 64);
  EXPECT_EQ(E.j_num, 1728);
  EXPECT_EQ(E.j_den, 1);
}

TEST(Curve, SingularModel) {
  try {
    derive_invariants(0, 0, 0, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularModel);
  }
}

TEST(Curve, Hypotheses) {
  const CurveQ E = curve_17a1();
  const auto h = check_hypotheses(E, 3);
  EXPECT_TRUE(h.semistable);
  EXPECT_TRUE(h.good_at_p);
  ASSERT_EQ(h.bad_primes.size(), 1u);
  EXPECT_TRUE(h.bad_primes[0].multiplicative);

  try {
    check_hypotheses(E, 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadAtP);
  }
  // y^2 = x^3 - 25x: v_5(c4) > 0 and v_5(disc) > 0.
  const CurveQ A = derive_invariants(0, 0, 0, -25, 0);
  EXPECT_GT(valuation(A.c4, 5), 0);
  EXPECT_GT(valuation(A.disc, 5), 0);
  EXPECT_FALSE(assess_hypotheses(A, 3).semistable);
  try {
    check_hypotheses(A, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemistable);
  }
}

TEST(Curve, KnownTraces17a1) {
  const CurveQ E = curve_17a1();
  const std::vector<std::pair<u64, i64>> known{{2, -1}, {3, 0}, {5, -2}, {7, 4}, {11, 0},
                                               {13, -2}, {19, -4}, {23, 4}, {29, 6}};
  for (auto [l, a] : known) EXPECT_EQ(trace_of_frobenius(E, l).a_ell, a) << l;
}

TEST(Curve, TraceMatchesPointCount) {
  for (const auto& a : sample()) {
    const CurveQ E = derive_invariants(a);
    const FrobeniusCache cache(E);
    for (u64 l : primes_up_to(300)) {
      if (!E.has_good_reduction(l)) continue;
      const oracle::Fq F(l, 1);
      const auto fd = trace_of_frobenius(E, l);
      EXPECT_EQ(Int(oracle::count_points(E, F)), fd.points_over(1)) << l;
      EXPECT_EQ(cache.a_ell(l), fd.a_ell);
      EXPECT_LE(fd.a_ell * fd.a_ell, 4 * static_cast<i64>(l));
    }
  }
}

TEST(Curve, PointsOverExtensionsMatchPointCount) {
  const CurveQ E = curve_17a1();
  for (u64 l : {2ull, 5ull, 7ull, 11ull}) {
    const auto fd = trace_of_frobenius(E, l);
    for (int f = 2; f <= 3; ++f) EXPECT_EQ(Int(oracle::count_points(E, oracle::Fq(l, f))), fd.points_over(f)) << l;
  }
}

TEST(Curve, ReductionTypes) {
  const CurveQ E = curve_17a1();
  EXPECT_TRUE(is_split_over_q(E, 17));
  const auto r = reduction_at(E, 17, 2);
  EXPECT_EQ(r.kind, ReductionKind::SplitMult);
  EXPECT_EQ(r.ord_j, -4);
  EXPECT_EQ(r.tamagawa(), 4);
  EXPECT_EQ(reduction_at(E, 5, 1).kind, ReductionKind::Good);

  // 14a1: a_2 = -1 (nonsplit at 2), a_7 = 1 (split at 7).
  const CurveQ F = derive_invariants(1, 0, 1, 4, -6);
  EXPECT_FALSE(is_split_over_q(F, 2));
  EXPECT_EQ(reduction_at(F, 2, 1).kind, ReductionKind::NonsplitMult);
  EXPECT_EQ(reduction_at(F, 2, 2).kind, ReductionKind::SplitMult);
  EXPECT_TRUE(is_split_over_q(F, 7));
  // 11a1: a_11 = 1.
  EXPECT_TRUE(is_split_over_q(derive_invariants(0, -1, 1, -10, -20), 11));
  // 15a1: a_3 = -1, a_5 = 1.
  const CurveQ G = derive_invariants(1, 1, 1, -10, -10);
  EXPECT_FALSE(is_split_over_q(G, 3));
  EXPECT_TRUE(is_split_over_q(G, 5));
}

TEST(Curve, OrdinaryOrSupersingular) {
  const CurveQ E = curve_17a1();
  EXPECT_EQ(ordinary_or_supersingular(E, 3), GoodKind::Supersingular);
  EXPECT_EQ(ordinary_or_supersingular(E, 5), GoodKind::Ordinary);
  EXPECT_EQ(ordinary_or_supersingular(derive_invariants(1, 0, 1, 4, -6), 5), GoodKind::Supersingular);
}

TEST(Curve, TorsionDimensionAnchors) {
  const CurveQ E = curve_17a1();
  EXPECT_GE(torsion_dimension(E, 11, 2, 3), 1);
  EXPECT_GE(torsion_dimension(E, 19, 1, 3), 1);
  EXPECT_EQ(torsion_dimension(E, 2, 2, 3), 0);
  EXPECT_EQ(torsion_dimension(E, 7, 1, 3), 0);
}

TEST(Curve, TorsionDimensionMatchesEnumeration) {
  for (const auto& a : sample()) {
    const CurveQ E = derive_invariants(a);
    for (u64 p : {3ull, 5ull, 7ull}) {
      for (u64 l : primes_up_to(60)) {
        if (l == p || !E.has_good_reduction(l)) continue;
        for (int f = 1; f <= 2; ++f)
          EXPECT_EQ(torsion_dimension(E, l, f, p), oracle::torsion_dimension(E, oracle::Fq(l, f), p))
              << "ell=" << l << " f=" << f << " p=" << p;
      }
    }
  }
}

TEST(DivisionPolynomials, Degrees) {
  const CurveQ E = curve_17a1();
  const auto dp = division_polynomials(E, 101, 7);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(dp.psi_squared(n).degree(), n * n - 1) << n;
}

TEST(DivisionPolynomials, VanishAtTorsionAbscissae) {
  // Every point of E(F_ell)[3] other than O has x a root of psi_3.
  const CurveQ E = curve_17a1();
  for (u64 l : {19ull, 31ull, 37ull}) {
    const auto dp = division_polynomials(E, l, 3);
    const FpPoly g = gcd(dp.f[3], powmod(FpPoly(l, {0, 1}), Int(l), dp.f[3]) - FpPoly(l, {0, 1}));
    const int dim = oracle::torsion_dimension(E, oracle::Fq(l, 1), 3);
    if (dim == 0) continue;
    EXPECT_GE(g.degree(), 1) << l;
  }
}

TEST(DivisionPolynomials, ScalarFrobeniusMatchesEnumeration) {
  // When a^2 = 4 ell mod p, Frobenius is the scalar c = a/2 on E[p] exactly
  // when E[p] is rational over F_{ell^ord(c)}.
  int seen = 0;
  for (const auto& a : sample()) {
    const CurveQ E = derive_invariants(a);
    for (u64 p : {3ull, 5ull}) {
      for (u64 l : primes_up_to(100)) {
        if (l == p || !E.has_good_reduction(l)) continue;
        const i64 t = trace_of_frobenius(E, l).a_ell;
        const i64 P = static_cast<i64>(p);
        if (mod(t * t - 4 * static_cast<i64>(l), P) != 0) continue;
        const u64 c = static_cast<u64>(mod(t * invmod(2, P), P));
        const int f = multiplicative_order(c, p);
        if (ipow_u64(l, static_cast<unsigned>(f)) > 20000) continue;
        const bool full = oracle::torsion_dimension(E, oracle::Fq(l, f), p) == 2;
        EXPECT_EQ(frobenius_is_scalar(E, l, p, c), full) << "ell=" << l << " p=" << p;
        ++seen;
      }
    }
  }
  EXPECT_GT(seen, 5);
}
