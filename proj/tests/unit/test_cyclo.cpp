#include <gtest/gtest.h>

#include "oracles.hpp"
#include "selmer/cyclo.hpp"
#include "selmer/error.hpp"

using namespace selmer;

TEST(Cyclo, PlaceOver) {
  for (u64 p : {3ull, 5ull, 7ull}) {
    for (u64 l : primes_up_to(100)) {
      const PlaceK v = place_over(l, p);
      if (l == p) {
        EXPECT_EQ(v.e_v, static_cast<int>(p - 1));
        EXPECT_EQ(v.f_v, 1);
        EXPECT_EQ(v.g, 1);
        continue;
      }
      int f = 1;
      u64 x = l % p;
      while (x != 1) x = x * l % p, ++f;
      EXPECT_EQ(v.f_v, f);
      EXPECT_EQ(v.e_v, 1);
      EXPECT_EQ(v.g * f, static_cast<int>(p - 1));
      EXPECT_EQ(v.q_v, ipow(Int(l), static_cast<unsigned>(f)));
    }
  }
}

TEST(Cyclo, NormalizeM) {
  const auto n = normalize_m(24, 3);
  EXPECT_EQ(n.m, 3);
  EXPECT_EQ(n.removed.size(), 1u);
  EXPECT_EQ(normalize_m(34, 3).m, 34);
  EXPECT_EQ(normalize_m(16, 3).m, 2);
  for (i64 bad : {27, 8, 1, -16}) {
    try {
      normalize_m(bad, 3);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), bad < 2 ? ErrorCode::InvalidArgument : ErrorCode::DegenerateExtension)
          << bad;
    }
  }
  EXPECT_THROW(normalize_m(0, 3), Error);
}

TEST(Cyclo, BehaviorRequiresNormalizedM) {
  try {
    behavior_in_Lm(place_over(2, 3), 16, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(Cyclo, TameBehaviorMatchesPthPowerTest) {
  for (u64 p : {3ull, 5ull}) {
    for (i64 m : {2, 6, 10, 17, 34, 45, 98, 242}) {
      if (!is_pth_power_free(m, static_cast<int>(p))) continue;
      for (u64 l : primes_up_to(110)) {
        if (l == p) continue;
        const PlaceK v = place_over(l, p);
        const SplitBehavior b = behavior_in_Lm(v, m, p);
        if (m % static_cast<i64>(l) == 0) {
          EXPECT_EQ(b.kind, BehaviorKind::Ramified);
          EXPECT_EQ(b.branch, BehaviorBranch::Tame);
          EXPECT_FALSE(b.t.has_value());
          continue;
        }
        if (ipow(Int(l), static_cast<unsigned>(v.f_v)) > 20000) continue;
        const bool split = oracle::is_pth_power(l, v.f_v, p, m);
        EXPECT_EQ(b.kind, split ? BehaviorKind::Split : BehaviorKind::Inert) << "ell=" << l << " m=" << m;
        EXPECT_EQ(b.branch, BehaviorBranch::PowerResidue);
      }
    }
  }
}

TEST(Cyclo, WildBehavior) {
  const PlaceK v3 = place_over(3, 3);
  auto b = behavior_in_Lm(v3, 3, 3);
  EXPECT_EQ(b.kind, BehaviorKind::Ramified);
  EXPECT_EQ(b.branch, BehaviorBranch::WildPDividesM);
  EXPECT_EQ(b.t, wild_jump(3));

  b = behavior_in_Lm(v3, 2, 3);  // 2^2 = 4 mod 9
  EXPECT_EQ(b.kind, BehaviorKind::Ramified);
  EXPECT_EQ(b.branch, BehaviorBranch::WildJumpOne);
  EXPECT_EQ(b.t, 1);

  b = behavior_in_Lm(v3, 10, 3);  // 10^2 = 1 mod 9
  EXPECT_EQ(b.kind, BehaviorKind::Split);
  EXPECT_EQ(b.branch, BehaviorBranch::UnramifiedAtP);

  b = behavior_in_Lm(place_over(5, 5), 7, 5);  // 7^4 = 2401 = 1 mod 25
  EXPECT_EQ(b.kind, BehaviorKind::Split);
  b = behavior_in_Lm(place_over(5, 5), 2, 5);
  EXPECT_EQ(b.t, 1);
}

TEST(Cyclo, ArchimedeanPlacesSplit) {
  PlaceK inf;
  inf.ell = 0;
  const auto b = behavior_in_Lm(inf, 2, 3);
  EXPECT_EQ(b.kind, BehaviorKind::Split);
  EXPECT_EQ(b.branch, BehaviorBranch::Archimedean);
}

TEST(Cyclo, Names) {
  EXPECT_EQ(to_string(BehaviorKind::Split), "split");
  EXPECT_EQ(to_string(BehaviorKind::Inert), "inert");
  EXPECT_EQ(to_string(BehaviorKind::Ramified), "ramified");
}
