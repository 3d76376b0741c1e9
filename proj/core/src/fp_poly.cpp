#include "selmer/fp_poly.hpp"

#include <utility>

#include "selmer/error.hpp"

namespace selmer {

FpPoly::FpPoly(u64 q, std::vector<u64> coeffs) : q_(q), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= q_;
  trim();
}

FpPoly::FpPoly(u64 q, std::initializer_list<i64> coeffs) : q_(q) {
  c_.reserve(coeffs.size());
  for (i64 c : coeffs) c_.push_back(static_cast<u64>(mod(c, static_cast<i64>(q))));
  trim();
}

FpPoly FpPoly::constant(u64 q, i64 c) { return FpPoly(q, {c}); }

FpPoly FpPoly::monomial(u64 q, int degree, i64 c) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = static_cast<u64>(mod(c, static_cast<i64>(q)));
  return FpPoly(q, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 FpPoly::eval(u64 x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (selmer::mulmod(acc, x, q_) + *it) % q_;
  return acc;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<u64> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = ((*this)[i] + o[i]) % q_;
  return FpPoly(q_, std::move(v));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<u64> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = ((*this)[i] + q_ - o[i]) % q_;
  return FpPoly(q_, std::move(v));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(q_);
  std::vector<u64> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + selmer::mulmod(c_[i], o.c_[j], q_)) % q_;
  }
  return FpPoly(q_, std::move(v));
}

FpPoly FpPoly::scaled(u64 s) const {
  std::vector<u64> v(c_);
  for (auto& c : v) c = selmer::mulmod(c, s % q_, q_);
  return FpPoly(q_, std::move(v));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(q_);
  std::vector<u64> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = selmer::mulmod(c_[i], i % q_, q_);
  return FpPoly(q_, std::move(v));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(static_cast<u64>(invmod(static_cast<i64>(leading()), static_cast<i64>(q_))));
}

FpDivMod divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  const u64 q = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(q), a};
  std::vector<u64> r(a.coeffs());
  std::vector<u64> quot(a.degree() - b.degree() + 1, 0);
  const u64 inv_lead = static_cast<u64>(invmod(static_cast<i64>(b.leading()), static_cast<i64>(q)));
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    u64 c = mulmod(r[i], inv_lead, q);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + q - mulmod(c, b[j], q)) % q;
  }
  r.resize(db);
  return {FpPoly(q, std::move(quot)), FpPoly(q, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).rem; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly powmod(const FpPoly& base, Int exp, const FpPoly& m) {
  FpPoly result = FpPoly::constant(base.modulus(), 1) % m;
  FpPoly b = base % m;
  while (exp > 0) {
    if ((exp & 1) != 0) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace selmer
