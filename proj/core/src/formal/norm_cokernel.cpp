#include "selmer/formal/norm_cokernel.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace selmer::formal {

namespace {

// Canonical representative of x modulo m_L^D.
LElem truncate_L(const Tower& tw, const LElem& x, int D) {
  const int P = static_cast<int>(tw.p());
  LElem r(x.size());
  for (int j = 0; j < P; ++j) {
    const int need = D - tw.basis_valuation(j);
    r[j] = tw.K().truncate(x[j], need <= 0 ? 0 : (need + P - 1) / P);
  }
  return r;
}

void require_same_ring(const FormalGroup& G, const KField& K) {
  if (G.ring().p != K.p() || G.ring().N != K.N())
    throw Error(ErrorCode::InvalidArgument, "formal group and field use different coefficient rings");
}

}  // namespace

TruncatedGroup::TruncatedGroup(const FormalGroup& G, const KField& K, int T) : G_(G), K_(K), T_(T) {
  require_same_ring(G, K);
  if (T < 2) throw Error(ErrorCode::InvalidArgument, "T must be at least 2");
  if (G.prec() < T) throw Error(ErrorCode::PrecisionTooLow, "formal group truncated below T");
  if (T >= K.precision_levels()) throw Error(ErrorCode::PrecisionTooLow, "T exceeds coefficient precision");
  inv_ = inverse_series(FormalGroup{G.name, G.F.truncated(T)});
}

KElem TruncatedGroup::add(const KElem& x, const KElem& y) const {
  // Terms of total degree >= T lie in m_K^T.
  std::vector<KElem> yp{K_.one()};
  for (int j = 1; j < T_; ++j) yp.push_back(reduce(K_.mul(yp.back(), y)));
  KElem acc = K_.zero();
  for (int i = T_ - 1; i >= 0; --i) {
    KElem inner = K_.zero();
    for (int j = 0; i + j < T_; ++j) {
      const u64 c = G_.F(i, j);
      if (c) inner = K_.add(inner, K_.scale(yp[j], c));
    }
    acc = reduce(K_.add(K_.mul(acc, x), inner));
  }
  return acc;
}

KElem TruncatedGroup::negate(const KElem& x) const {
  KElem acc = K_.zero(), xp = K_.one();
  for (int i = 1; i < T_; ++i) {
    xp = reduce(K_.mul(xp, x));
    if (inv_[i]) acc = K_.add(acc, K_.scale(xp, inv_[i]));
  }
  return reduce(acc);
}

KElem TruncatedGroup::multiple(const KElem& x, u64 n) const {
  KElem acc = K_.zero(), base = reduce(x);
  while (n) {
    if (n & 1) acc = add(acc, base);
    base = add(base, base);
    n >>= 1;
  }
  return acc;
}

int TruncatedGroup::level(const KElem& x) const { return std::min(K_.val(reduce(x)), T_); }

LElem fg_add(const FormalGroup& G, const Tower& tw, const LElem& x, const LElem& y, int D) {
  require_same_ring(G, tw.K());
  if (G.prec() < D) throw Error(ErrorCode::PrecisionTooLow, "formal group truncated below requested degree");
  std::vector<LElem> yp{tw.one()};
  for (int j = 1; j < D; ++j) yp.push_back(truncate_L(tw, tw.mul(yp.back(), y), D));
  LElem acc = tw.zero();
  for (int i = D - 1; i >= 0; --i) {
    LElem inner = tw.zero();
    for (int j = 0; i + j < D; ++j) {
      const u64 c = G.F(i, j);
      if (c) inner = tw.add(inner, tw.scale(yp[j], c));
    }
    acc = truncate_L(tw, tw.add(tw.mul(acc, x), inner), D);
  }
  return acc;
}

LElem fg_norm(const FormalGroup& G, const Tower& tw, const LElem& x, int D) {
  LElem acc = truncate_L(tw, x, D), c = x;
  for (u64 i = 1; i < tw.p(); ++i) {
    c = tw.sigma(c);
    acc = fg_add(G, tw, acc, c, D);
  }
  return acc;
}

std::vector<KElem> norm_generators(const FormalGroup& G, const Tower& tw, int T) {
  const int P = static_cast<int>(tw.p());
  const int D = P * T;
  if (D >= tw.precision_levels()) throw Error(ErrorCode::PrecisionTooLow, "pT exceeds tower precision");
  const LElem pl = tw.uniformiser();
  LElem pk = pl;
  std::vector<KElem> gens;
  for (int k = 1; k < D; ++k) {
    LElem n = fg_norm(G, tw, pk, D);
    if (!tw.in_K(n)) throw Error(ErrorCode::PrecisionTooLow, "norm left K at working precision");
    gens.push_back(tw.K().truncate(n[0], T));
    pk = truncate_L(tw, tw.mul(pk, pl), D);
  }
  return gens;
}

CokernelRun norm_cokernel_dimension(const FormalGroup& G, const Tower& tw, int T) {
  const TruncatedGroup Q(G, tw.K(), T);
  const KField& K = tw.K();
  const u64 p = tw.p();
  const std::vector<KElem> gens = norm_generators(G, tw, T);

  // One element per occupied level; subtracting [c]B_l clears level l. The
  // multiples [p]B_l are fed back so the table spans a subgroup.
  struct Entry {
    u64 lead;
    std::vector<KElem> neg_multiples;  // -[c]B for c = 0..p-1
  };
  std::map<int, Entry> table;
  std::deque<KElem> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    KElem x = Q.reduce(queue.front());
    queue.pop_front();
    for (;;) {
      const int lvl = Q.level(x);
      if (lvl >= T) break;
      auto it = table.find(lvl);
      if (it == table.end()) {
        Entry e{K.digit(x, lvl), {}};
        for (u64 c = 0; c < p; ++c) e.neg_multiples.push_back(Q.negate(Q.multiple(x, c)));
        table.emplace(lvl, std::move(e));
        queue.push_back(Q.multiple(x, p));
        break;
      }
      const u64 c = mulmod(K.digit(x, lvl), static_cast<u64>(invmod(static_cast<i64>(it->second.lead), static_cast<i64>(p))), p);
      x = Q.add(x, it->second.neg_multiples[c]);
    }
  }
  CokernelRun run;
  run.N = K.N();
  run.T = T;
  run.image_levels = static_cast<int>(table.size());
  run.generators = gens.size();
  run.dim = (T - 1) - run.image_levels;
  return run;
}

FormalGroup FormalGroupSpec::build(u64 p, int prec, int N) const {
  switch (kind) {
    case Kind::Curve:
      if (!curve) throw Error(ErrorCode::InvalidArgument, "curve missing");
      return formal_group_of_curve(*curve, p, prec, N, 1 << 10);
    case Kind::Multiplicative: return multiplicative_formal_group(p, prec, N);
    case Kind::Additive: return additive_formal_group(p, prec, N);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown formal group kind");
}

CokernelResult norm_cokernel_stable(const FormalGroupSpec& spec, u64 p, i64 m, int N, std::optional<int> T) {
  CokernelResult res;
  const Tower tw = build_tower(p, m, N);
  res.ramification = tw.ramification();
  const int T0 = T.value_or(default_truncation(res.ramification.t, p));
  const int P = static_cast<int>(p);
  {
    const FormalGroup G = spec.build(p, P * T0, N);
    res.primary = norm_cokernel_dimension(G, tw, T0);
  }
  {
    const Tower tw2 = build_tower(p, m, N + 2);
    const FormalGroup G = spec.build(p, P * (T0 + 2), N + 2);
    res.check = norm_cokernel_dimension(G, tw2, T0 + 2);
  }
  if (res.primary.dim != res.check.dim)
    throw Error(ErrorCode::TruncationTooSmall, "cokernel " + std::to_string(res.primary.dim) + " at T = " +
                                                   std::to_string(T0) + " but " + std::to_string(res.check.dim) +
                                                   " at T = " + std::to_string(T0 + 2));
  res.dim = res.primary.dim;
  return res;
}

std::pair<int, int> cokernel_bounds(int t, int f, int deg) {
  if (t < 1) throw Error(ErrorCode::InvalidJump, "t = " + std::to_string(t));
  if (t == 1) return {0, 0};
  return {f, std::min(f * (t - 1), deg + 2)};
}

NormIdentityCheck norm_identity_check(const FormalGroup& G, const NormExpansion& ex, const Tower& tw, const LElem& x) {
  const KField& K = tw.K();
  const int P = static_cast<int>(tw.p());
  if (ex.n != P) throw Error(ErrorCode::InvalidArgument, "expansion must have n = p");
  const int vx = tw.val(x);
  if (vx < 1) throw Error(ErrorCode::InvalidArgument, "x must lie in m_L");

  const int D = std::min(G.prec(), tw.precision_levels() - 1);
  const LElem nf = fg_norm(G, tw, x, D);
  if (!tw.in_K(nf)) throw Error(ErrorCode::PrecisionTooLow, "norm left K at working precision");
  const KElem nx = tw.norm(x);
  KElem rhs = tw.trace(x), np = K.one();
  for (std::size_t i = 1; i < ex.diagonal.size(); ++i) {
    np = K.mul(np, nx);
    rhs = K.add(rhs, K.scale(np, ex.diagonal[i]));
  }
  // Everything dropped lies beyond the working bound.
  const int bound = std::min(D / P, static_cast<int>(ex.diagonal.size()) * vx);
  NormIdentityCheck out;
  out.difference_val = std::min(K.val(K.truncate(K.sub(nf[0], rhs), bound)), bound);
  const LElem x2 = tw.mul(x, x);
  out.ideal_val = kValInfinity;
  for (int j = 0; j < P; ++j) out.ideal_val = std::min(out.ideal_val, K.val(tw.trace(tw.mul(x2, tw.basis(j)))));
  out.ok = out.difference_val >= std::min(out.ideal_val, bound);
  return out;
}

}  // namespace selmer::formal
