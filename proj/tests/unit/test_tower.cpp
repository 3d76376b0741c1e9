#include <gtest/gtest.h>

#include "selmer/error.hpp"
#include "selmer/formal/tower.hpp"

using namespace selmer;
using namespace selmer::formal;

namespace {

struct Case {
  u64 p;
  i64 m;
  int t;
  int m_diff;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c{{3, 3, 3, 8}, {3, 6, 3, 8}, {3, 2, 1, 4}, {3, 5, 1, 4},
                                   {5, 5, 5, 24}, {5, 2, 1, 8}};
  return c;
}

// Products of basis elements give a spread of valuations.
std::vector<LElem> samples(const Tower& tw) {
  std::vector<LElem> out;
  for (u64 j = 0; j < tw.p(); ++j) {
    out.push_back(tw.basis(static_cast<int>(j)));
    out.push_back(tw.add(tw.basis(static_cast<int>(j)), tw.scale(tw.uniformiser(), 2)));
  }
  out.push_back(tw.add(tw.one(), tw.uniformiser()));
  return out;
}

}  // namespace

TEST(Tower, RamificationData) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 12);
    EXPECT_EQ(tw.jump(), c.t) << c.p << " " << c.m;
    EXPECT_EQ(tw.discriminant_valuation(), c.m_diff) << c.p << " " << c.m;
    EXPECT_EQ(c.m_diff, (c.t + 1) * static_cast<int>(c.p - 1));
    EXPECT_EQ(tw.kind(), c.m % static_cast<i64>(c.p) == 0 ? TowerKind::Wild : TowerKind::JumpOne);
  }
}

TEST(Tower, BasisValuationsDistinctModP) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 10);
    std::vector<bool> seen(c.p, false);
    for (u64 j = 0; j < c.p; ++j) {
      const int v = tw.basis_valuation(static_cast<int>(j));
      EXPECT_EQ(tw.val(tw.basis(static_cast<int>(j))), v);
      EXPECT_FALSE(seen[v % c.p]);
      seen[v % c.p] = true;
    }
    EXPECT_EQ(tw.val(tw.uniformiser()), 1);
  }
}

TEST(Tower, SigmaHasOrderP) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 10);
    for (const auto& x : samples(tw)) EXPECT_EQ(tw.sigma_pow(x, static_cast<int>(c.p)), x);
    EXPECT_NE(tw.sigma(tw.uniformiser()), tw.uniformiser());
    const LElem k = tw.from_K(tw.K().pi());
    EXPECT_EQ(tw.sigma(k), k);
    EXPECT_TRUE(tw.in_K(k));
    EXPECT_FALSE(tw.in_K(tw.uniformiser()));
  }
}

TEST(Tower, SigmaIsMultiplicative) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 10);
    const auto s = samples(tw);
    for (const auto& x : s)
      for (const auto& y : s) EXPECT_EQ(tw.sigma(tw.mul(x, y)), tw.mul(tw.sigma(x), tw.sigma(y)));
  }
}

TEST(Tower, TraceTwoWays) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 10);
    const auto s = samples(tw);
    for (const auto& x : s)
      for (const auto& y : s) {
        const LElem xy = tw.mul(x, y);
        EXPECT_EQ(tw.trace(xy), tw.trace_by_conjugates(xy));
      }
  }
}

TEST(Tower, ValuationIsAdditive) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 12);
    const auto s = samples(tw);
    for (const auto& x : s)
      for (const auto& y : s) EXPECT_EQ(tw.val(tw.mul(x, y)), tw.val(x) + tw.val(y));
  }
}

TEST(Tower, NormOfUniformiser) {
  for (const auto& c : cases()) {
    const Tower tw = build_tower(c.p, c.m, 10);
    EXPECT_EQ(tw.K().val(tw.norm(tw.uniformiser())), 1);
    const KElem a = tw.K().from_int(7);
    EXPECT_EQ(tw.norm(tw.from_K(a)), tw.K().pow(a, c.p));
    EXPECT_EQ(tw.trace(tw.one()), tw.K().from_int(static_cast<i64>(c.p)));
  }
}

TEST(Tower, TraceIdeals) {
  const Tower w = build_tower(3, 3, 12);
  std::vector<int> r;
  for (const auto& row : trace_ideal_check(w, 6)) {
    EXPECT_EQ(row.r, row.formula) << row.n;
    EXPECT_EQ(row.formula, (8 + row.n) / 3);
    r.push_back(row.r);
  }
  EXPECT_EQ(r, (std::vector<int>{2, 3, 3, 3, 4, 4, 4}));
  for (const auto& row : trace_ideal_check(build_tower(3, 2, 12), 9)) EXPECT_EQ(row.r, (4 + row.n) / 3);
  for (const auto& row : trace_ideal_check(build_tower(5, 5, 12), 15)) EXPECT_EQ(row.r, (24 + row.n) / 5);
  EXPECT_THROW(trace_ideal_check(w, 10), Error);
}

TEST(Tower, Errors) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { build_tower(7, 7, 12); }), ErrorCode::UnsupportedP);
  EXPECT_EQ(code_of([] { build_tower(3, 3, 6); }), ErrorCode::PrecisionTooLow);
  EXPECT_EQ(code_of([] { build_tower(3, 10, 12); }), ErrorCode::UnsupportedTower);
}

TEST(LocalField, Basics) {
  const KField K(3, 10);
  EXPECT_EQ(K.val(K.pi()), 1);
  EXPECT_EQ(K.val(K.from_int(3)), 2);
  EXPECT_EQ(K.val(K.from_int(9)), 4);
  EXPECT_EQ(K.val(K.zero()), kValInfinity);
  EXPECT_EQ(K.pow(K.zeta(), 3), K.one());
  EXPECT_EQ(K.mul(K.w(), K.inv_unit(K.w())), K.one());
  // pi^(p-1) = -p w
  EXPECT_EQ(K.pow(K.pi(), 2), K.neg(K.mul(K.from_int(3), K.w())));
  const KElem x = K.div(K.from_int(6), K.pi());
  EXPECT_EQ(K.val(x), 1);
  EXPECT_GE(K.val(K.sub(K.mul(x, K.pi()), K.from_int(6))), K.precision_levels() - 4);
  EXPECT_NE(K.digit(K.from_int(3), 2), 0u);
  EXPECT_EQ(K.truncate(K.from_int(3), 2), K.zero());
}
