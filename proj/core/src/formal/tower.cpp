#include "selmer/formal/tower.hpp"

#include <algorithm>
#include <numeric>

#include "selmer/cyclo.hpp"

namespace selmer::formal {

namespace {

u64 binom(u64 n, u64 k) {
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Tower Tower::build(u64 p, i64 m, int N) {
  if (p != 3 && p != 5) throw Error(ErrorCode::UnsupportedP, "towers are built for p in {3, 5}");
  if (N < 8) throw Error(ErrorCode::PrecisionTooLow, "N must be at least 8");
  const i64 mk = normalize_m(m, p).m;
  const int P = static_cast<int>(p);

  Tower tw{KField(p, N)};
  tw.m_ = mk;
  const KField& K = tw.K_;
  tw.T_.assign(P, std::vector<LElem>(P));
  tw.S_.assign(P, LElem());

  if (mk % P == 0) {
    tw.kind_ = TowerKind::Wild;
    // m = p^s m0 and k = -1/s mod p: m^k = (p^r/pi)^p * (-pi w m0^k).
    const int s = valuation(mk, p);
    const i64 m0 = mk / static_cast<i64>(ipow_u64(p, static_cast<unsigned>(s)));
    const int k = static_cast<int>(mod(-invmod(s, P), P));
    const KElem c = K.mul(K.neg(K.mul(K.pi(), K.w())), K.pow(K.from_int(m0), static_cast<u64>(k)));
    for (int j = 0; j < P; ++j) {
      tw.val_.push_back(j);
      for (int l = 0; l < P; ++l) {
        LElem e = tw.zero();
        if (j + l < P) {
          e[j + l] = K.one();
        } else {
          e[j + l - P] = c;
        }
        tw.T_[j][l] = e;
      }
      LElem se = tw.zero();
      se[j] = K.pow(K.zeta(), static_cast<u64>(j));
      tw.S_[j] = se;
    }
    tw.unif_ = 1;
  } else {
    const u64 p2 = p * p;
    const i64 mm = mod(mk, static_cast<i64>(p2));
    if (powmod(static_cast<u64>(mm), p - 1, p2) == 1)
      throw Error(ErrorCode::UnsupportedTower, "K(m^(1/p)) is unramified above p");
    tw.kind_ = TowerKind::JumpOne;
    // y^p = u = m^(p-1), Y = y - 1 with v_L(Y) = p - 1; e_j = Y^j / pi^(j-1).
    // Products need exact division by powers of pi, done at extra precision.
    const KField Kx(p, N + 4);
    const KElem u = Kx.pow(Kx.from_int(mk), p - 1);
    // Y^n as polynomials of degree < p, using Y^p = (u - 1) - sum C(p, i) Y^i.
    std::vector<std::vector<KElem>> ypow;
    std::vector<KElem> cur(P, Kx.zero());
    cur[0] = Kx.one();
    for (int n = 0; n <= 2 * P - 2; ++n) {
      ypow.push_back(cur);
      std::vector<KElem> next(P, Kx.zero());
      for (int i = 0; i + 1 < P; ++i) next[i + 1] = cur[i];
      const KElem top = cur[P - 1];
      next[0] = Kx.add(next[0], Kx.mul(top, Kx.sub(u, Kx.one())));
      for (int i = 1; i < P; ++i)
        next[i] = Kx.sub(next[i], Kx.scale(top, binom(p, static_cast<u64>(i)) % Kx.ring().q));
      cur = next;
    }
    auto e_coords = [&](int n) {
      // Y^n / pi^(n-2) in the basis e_j (n >= 2).
      LElem out = tw.zero();
      for (int i = 0; i < P; ++i) {
        const KElem& b = ypow[n][i];
        const int shift = (i == 0 ? 2 : i + 1) - n;  // power of pi multiplying b
        KElem v = shift >= 0 ? Kx.mul(b, Kx.pow(Kx.pi(), static_cast<u64>(shift))) : Kx.div_pi_pow(b, -shift);
        out[i] = Kx.lower(v, K);
      }
      return out;
    };
    tw.val_.push_back(0);
    for (int j = 1; j < P; ++j) tw.val_.push_back(P - j);
    for (int j = 0; j < P; ++j) {
      for (int l = 0; l < P; ++l) {
        if (j == 0 || l == 0) {
          tw.T_[j][l] = tw.basis(j + l);
        } else {
          tw.T_[j][l] = e_coords(j + l);
        }
      }
    }
    // sigma(Y) = pi + zeta Y gives sigma(e_j) = pi e_0 + sum_{i=1}^{j} C(j, i) zeta^i e_i.
    tw.S_[0] = tw.one();
    for (int j = 1; j < P; ++j) {
      LElem se = tw.zero();
      se[0] = K.pi();
      for (int i = 1; i <= j; ++i)
        se[i] = K.scale(K.pow(K.zeta(), static_cast<u64>(i)), binom(static_cast<u64>(j), static_cast<u64>(i)));
      tw.S_[j] = se;
    }
    tw.unif_ = P - 1;
  }

  for (int j = 0; j < P; ++j) {
    KElem t = K.zero();
    for (int l = 0; l < P; ++l) t = K.add(t, tw.T_[j][l][l]);
    tw.traces_.push_back(t);
  }
  return tw;
}

LElem Tower::zero() const { return LElem(p(), K_.zero()); }

LElem Tower::one() const { return basis(0); }

LElem Tower::from_K(const KElem& a) const {
  LElem r = zero();
  r[0] = a;
  return r;
}

LElem Tower::basis(int j) const {
  LElem r = zero();
  r.at(j) = K_.one();
  return r;
}

LElem Tower::add(const LElem& a, const LElem& b) const {
  LElem r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = K_.add(a[j], b[j]);
  return r;
}

LElem Tower::sub(const LElem& a, const LElem& b) const {
  LElem r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = K_.sub(a[j], b[j]);
  return r;
}

LElem Tower::mul(const LElem& a, const LElem& b) const {
  const int P = static_cast<int>(p());
  LElem r = zero();
  for (int j = 0; j < P; ++j) {
    if (K_.is_zero(a[j])) continue;
    for (int l = 0; l < P; ++l) {
      if (K_.is_zero(b[l])) continue;
      const KElem c = K_.mul(a[j], b[l]);
      const LElem& t = T_[j][l];
      for (int i = 0; i < P; ++i)
        if (!K_.is_zero(t[i])) r[i] = K_.add(r[i], K_.mul(c, t[i]));
    }
  }
  return r;
}

LElem Tower::scale(const LElem& a, const KElem& c) const {
  LElem r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = K_.mul(a[j], c);
  return r;
}

LElem Tower::scale(const LElem& a, u64 c) const {
  LElem r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = K_.scale(a[j], c);
  return r;
}

LElem Tower::pow(LElem a, u64 e) const {
  LElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Tower::val(const LElem& a) const {
  int best = kValInfinity;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int v = K_.val(a[j]);
    if (v != kValInfinity) best = std::min(best, static_cast<int>(p()) * v + val_[j]);
  }
  return best;
}

bool Tower::in_K(const LElem& a) const {
  for (std::size_t j = 1; j < a.size(); ++j)
    if (!K_.is_zero(a[j])) return false;
  return true;
}

LElem Tower::sigma(const LElem& a) const {
  LElem r = zero();
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!K_.is_zero(a[j])) r = add(r, scale(S_[j], a[j]));
  return r;
}

LElem Tower::sigma_pow(const LElem& a, int k) const {
  LElem r = a;
  const int P = static_cast<int>(p());
  for (int i = 0; i < mod(k, P); ++i) r = sigma(r);
  return r;
}

KElem Tower::trace(const LElem& a) const {
  KElem r = K_.zero();
  for (std::size_t j = 0; j < a.size(); ++j) r = K_.add(r, K_.mul(a[j], traces_[j]));
  return r;
}

KElem Tower::trace_by_conjugates(const LElem& a) const {
  LElem s = zero(), c = a;
  for (u64 i = 0; i < p(); ++i) {
    s = add(s, c);
    c = sigma(c);
  }
  if (!in_K(s)) throw Error(ErrorCode::PrecisionTooLow, "conjugate sum left K");
  return s[0];
}

KElem Tower::norm(const LElem& a) const {
  LElem s = one(), c = a;
  for (u64 i = 0; i < p(); ++i) {
    s = mul(s, c);
    c = sigma(c);
  }
  if (!in_K(s)) throw Error(ErrorCode::PrecisionTooLow, "conjugate product left K");
  return s[0];
}

int Tower::jump() const {
  const LElem pl = uniformiser();
  const int v = val(sub(sigma(pl), pl));
  if (v >= precision_levels()) throw Error(ErrorCode::PrecisionTooLow, "sigma fixes the uniformiser to precision");
  return v - 1;
}

int Tower::discriminant_valuation() const {
  const int P = static_cast<int>(p());
  std::vector<std::vector<KElem>> M(P, std::vector<KElem>(P));
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j) M[i][j] = trace(T_[i][j]);
  std::vector<int> perm(P);
  std::iota(perm.begin(), perm.end(), 0);
  KElem det = K_.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < P; ++i)
      for (int j = i + 1; j < P; ++j)
        if (perm[i] > perm[j]) ++inversions;
    KElem term = K_.one();
    for (int i = 0; i < P && !K_.is_zero(term); ++i) term = K_.mul(term, M[i][perm[i]]);
    det = inversions % 2 ? K_.sub(det, term) : K_.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const int v = K_.val(det);
  if (v >= K_.precision_levels()) throw Error(ErrorCode::PrecisionTooLow, "discriminant vanishes to precision");
  return v;
}

std::vector<TraceIdealRow> trace_ideal_check(const Tower& tower, int n_max) {
  const int P = static_cast<int>(tower.p());
  if (n_max < 0 || n_max > 3 * P) throw Error(ErrorCode::InvalidArgument, "n_max must lie in 0..3p");
  const RamificationData rd = tower.ramification();
  const KField& K = tower.K();
  std::vector<TraceIdealRow> rows;
  LElem pin = tower.one();
  const LElem pl = tower.uniformiser();
  for (int n = 0; n <= n_max; ++n) {
    int r = kValInfinity;
    for (int j = 0; j < P; ++j) r = std::min(r, K.val(tower.trace(tower.mul(pin, tower.basis(j)))));
    if (r >= K.precision_levels()) throw Error(ErrorCode::PrecisionTooLow, "trace vanishes to precision");
    rows.push_back({n, r, (rd.m_diff + n) / P});
    pin = tower.mul(pin, pl);
  }
  return rows;
}

}  // namespace selmer::formal
