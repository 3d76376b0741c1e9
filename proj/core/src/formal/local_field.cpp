#include "selmer/formal/local_field.hpp"

namespace selmer::formal {

namespace {

u64 binom(u64 n, u64 k) {
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

KField::KField(u64 p, int N) : R_(p, N), d_(static_cast<int>(p) - 1) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  // ((1 + pi)^p - 1)/pi = 0 gives pi^(p-1) = -sum_{i=1}^{p-1} C(p, i) pi^(i-1).
  relation_.assign(d_, 0);
  w_.assign(d_, 0);
  for (int i = 1; i < static_cast<int>(p); ++i) {
    const u64 c = binom(p, static_cast<u64>(i));
    relation_[i - 1] = R_.neg(c % R_.q);
    w_[i - 1] = (c / p) % R_.q;
  }
  w_inv_ = inv_unit(w_);
}

KElem KField::from_int(i64 a) const {
  KElem r = zero();
  r[0] = R_.from(a);
  return r;
}

KElem KField::from_int(const Int& a) const {
  KElem r = zero();
  r[0] = R_.from(a);
  return r;
}

KElem KField::pi() const {
  KElem r = zero();
  r[1] = 1;
  return r;
}

KElem KField::zeta() const { return add(one(), pi()); }

KElem KField::add(const KElem& a, const KElem& b) const {
  KElem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = R_.add(a[i], b[i]);
  return r;
}

KElem KField::sub(const KElem& a, const KElem& b) const {
  KElem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = R_.sub(a[i], b[i]);
  return r;
}

KElem KField::neg(const KElem& a) const {
  KElem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = R_.neg(a[i]);
  return r;
}

KElem KField::mul(const KElem& a, const KElem& b) const {
  std::vector<u64> t(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < d_; ++j)
      if (b[j]) t[i + j] = R_.add(t[i + j], R_.mul(a[i], b[j]));
  }
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    if (!t[k]) continue;
    for (int i = 0; i < d_; ++i) t[k - d_ + i] = R_.add(t[k - d_ + i], R_.mul(t[k], relation_[i]));
    t[k] = 0;
  }
  t.resize(d_);
  return t;
}

KElem KField::scale(const KElem& a, u64 s) const {
  KElem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = R_.mul(a[i], s);
  return r;
}

KElem KField::pow(KElem a, u64 e) const {
  KElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool KField::is_zero(const KElem& a) const {
  for (u64 c : a)
    if (c) return false;
  return true;
}

int KField::val(const KElem& a) const {
  int best = kValInfinity;
  for (int i = 0; i < d_; ++i)
    if (a[i]) best = std::min(best, d_ * R_.val(a[i]) + i);
  return best;
}

KElem KField::div_pi_pow(const KElem& a, int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (k == 0) return a;
  const int q = k / d_, r = k % d_;
  const int s = q + (r > 0 ? 1 : 0);
  // pi^k = (-p w)^q pi^r and 1/pi^r = pi^(d-r) / (-p w).
  KElem b = mul(a, pow(neg(w_inv_), static_cast<u64>(s)));
  if (r > 0) b = mul(b, pow(pi(), static_cast<u64>(d_ - r)));
  const u64 ps = ipow_u64(R_.p, static_cast<unsigned>(s));
  if (s > R_.N) throw Error(ErrorCode::PrecisionTooLow, "division exhausts precision");
  for (u64& c : b) {
    if (c % ps) throw Error(ErrorCode::InvalidArgument, "valuation below divisor");
    c /= ps;
  }
  return b;
}

KElem KField::inv_unit(const KElem& a) const {
  if (a[0] % R_.p == 0) throw Error(ErrorCode::InvalidArgument, "not a unit");
  KElem x = zero();
  x[0] = R_.inv(a[0]);
  const KElem two = from_int(2);
  for (int it = 0; it < 64; ++it) {
    KElem ax = mul(a, x);
    if (ax == one()) return x;
    x = mul(x, sub(two, ax));
  }
  throw Error(ErrorCode::PrecisionTooLow, "unit inverse did not converge");
}

KElem KField::div(const KElem& a, const KElem& b) const {
  const int v = val(b);
  if (v == kValInfinity) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return mul(div_pi_pow(a, v), inv_unit(div_pi_pow(b, v)));
}

KElem KField::truncate(const KElem& a, int T) const {
  KElem r(d_);
  for (int i = 0; i < d_; ++i) {
    const int k = T <= i ? 0 : (T - i + d_ - 1) / d_;
    if (k >= R_.N) {
      r[i] = a[i];
    } else {
      r[i] = a[i] % ipow_u64(R_.p, static_cast<unsigned>(k));
    }
  }
  return r;
}

u64 KField::digit(const KElem& a, int ell) const {
  const int A = ell / d_, i = ell % d_;
  if (A >= R_.N) return 0;
  return (a[i] / ipow_u64(R_.p, static_cast<unsigned>(A))) % R_.p;
}

KElem KField::lower(const KElem& a, const KField& target) const {
  KElem r(target.d_);
  for (int i = 0; i < d_; ++i) r[i] = a[i] % target.R_.q;
  return r;
}

}  // namespace selmer::formal
