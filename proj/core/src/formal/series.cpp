#include "selmer/formal/series.hpp"

#include <algorithm>

namespace selmer::formal {

UniSeries UniSeries::variable(const Zp& R, int prec) {
  UniSeries s(R, prec);
  if (prec > 1) s.c_[1] = 1;
  return s;
}

UniSeries UniSeries::constant(const Zp& R, int prec, u64 c) {
  UniSeries s(R, prec);
  if (prec > 0) s.c_[0] = c % R.q;
  return s;
}

int UniSeries::order() const {
  for (int i = 0; i < prec(); ++i)
    if (c_[i]) return i;
  return prec();
}

UniSeries UniSeries::operator+(const UniSeries& o) const {
  UniSeries r(R_, std::min(prec(), o.prec()));
  for (int i = 0; i < r.prec(); ++i) r.c_[i] = R_.add(c_[i], o.c_[i]);
  return r;
}

UniSeries UniSeries::operator-(const UniSeries& o) const {
  UniSeries r(R_, std::min(prec(), o.prec()));
  for (int i = 0; i < r.prec(); ++i) r.c_[i] = R_.sub(c_[i], o.c_[i]);
  return r;
}

UniSeries UniSeries::operator*(const UniSeries& o) const {
  const int P = std::min(prec(), o.prec());
  UniSeries r(R_, P);
  for (int i = 0; i < P; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; i + j < P; ++j)
      if (o.c_[j]) r.c_[i + j] = R_.add(r.c_[i + j], R_.mul(c_[i], o.c_[j]));
  }
  return r;
}

UniSeries UniSeries::scaled(u64 s) const {
  UniSeries r(R_, prec());
  for (int i = 0; i < prec(); ++i) r.c_[i] = R_.mul(c_[i], s);
  return r;
}

UniSeries UniSeries::truncated(int P) const {
  UniSeries r(R_, P);
  for (int i = 0; i < std::min(P, prec()); ++i) r.c_[i] = c_[i];
  return r;
}

UniSeries UniSeries::inverse() const {
  const int P = prec();
  UniSeries r(R_, P);
  if (P == 0) return r;
  const u64 inv0 = R_.inv(c_[0]);
  r.c_[0] = inv0;
  for (int n = 1; n < P; ++n) {
    u64 s = 0;
    for (int k = 1; k <= n; ++k) s = R_.add(s, R_.mul(c_[k], r.c_[n - k]));
    r.c_[n] = R_.mul(R_.neg(s), inv0);
  }
  return r;
}

BiSeries BiSeries::x(const Zp& R, int prec) {
  BiSeries s(R, prec);
  if (prec > 1) s.at(1, 0) = 1;
  return s;
}

BiSeries BiSeries::y(const Zp& R, int prec) {
  BiSeries s(R, prec);
  if (prec > 1) s.at(0, 1) = 1;
  return s;
}

BiSeries BiSeries::constant(const Zp& R, int prec, u64 c) {
  BiSeries s(R, prec);
  if (prec > 0) s.at(0, 0) = c % R.q;
  return s;
}

BiSeries BiSeries::in_x(const UniSeries& f, int prec) {
  BiSeries s(f.ring(), prec);
  for (int i = 0; i < std::min(prec, f.prec()); ++i) s.at(i, 0) = f[i];
  return s;
}

BiSeries BiSeries::in_y(const UniSeries& f, int prec) {
  BiSeries s(f.ring(), prec);
  for (int i = 0; i < std::min(prec, f.prec()); ++i) s.at(0, i) = f[i];
  return s;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
  BiSeries r(R_, std::min(P_, o.P_));
  for (int i = 0; i < r.P_; ++i)
    for (int j = 0; i + j < r.P_; ++j) r.at(i, j) = R_.add((*this)(i, j), o(i, j));
  return r;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
  BiSeries r(R_, std::min(P_, o.P_));
  for (int i = 0; i < r.P_; ++i)
    for (int j = 0; i + j < r.P_; ++j) r.at(i, j) = R_.sub((*this)(i, j), o(i, j));
  return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  const int P = std::min(P_, o.P_);
  BiSeries r(R_, P);
  for (int i1 = 0; i1 < P; ++i1) {
    for (int j1 = 0; i1 + j1 < P; ++j1) {
      const u64 a = (*this)(i1, j1);
      if (!a) continue;
      for (int i2 = 0; i1 + j1 + i2 < P; ++i2) {
        const u64* row = &o.c_[static_cast<std::size_t>(i2) * o.P_];
        u64* out = &r.c_[static_cast<std::size_t>(i1 + i2) * P + j1];
        for (int j2 = 0; i1 + j1 + i2 + j2 < P; ++j2) {
          if (row[j2]) out[j2] = R_.add(out[j2], R_.mul(a, row[j2]));
        }
      }
    }
  }
  return r;
}

BiSeries BiSeries::scaled(u64 s) const {
  BiSeries r(R_, P_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = R_.mul(c_[k], s);
  return r;
}

BiSeries BiSeries::transposed() const {
  BiSeries r(R_, P_);
  for (int i = 0; i < P_; ++i)
    for (int j = 0; i + j < P_; ++j) r.at(j, i) = (*this)(i, j);
  return r;
}

BiSeries BiSeries::truncated(int P) const {
  BiSeries r(R_, P);
  for (int i = 0; i < P; ++i)
    for (int j = 0; i + j < P; ++j) r.at(i, j) = (*this)(i, j);
  return r;
}

int BiSeries::order() const {
  for (int d = 0; d < P_; ++d)
    for (int i = 0; i <= d; ++i)
      if ((*this)(i, d - i)) return d;
  return P_;
}

BiSeries BiSeries::inverse_of_unit() const {
  if ((*this)(0, 0) != 1 % R_.q) throw Error(ErrorCode::InvalidArgument, "constant term must be 1");
  BiSeries h = *this;
  h.at(0, 0) = 0;
  BiSeries neg_h = h.scaled(R_.neg(1));
  BiSeries result = constant(R_, P_, 1);
  BiSeries power = result;
  for (int k = 1; k < P_; ++k) {
    power = power * neg_h;
    if (power.order() >= P_) break;
    result = result + power;
  }
  return result;
}

BiSeries BiSeries::substitute_into(const UniSeries& f) const {
  if ((*this)(0, 0) != 0) throw Error(ErrorCode::InvalidArgument, "substitution needs zero constant term");
  BiSeries result = constant(R_, P_, f[0]);
  BiSeries power = constant(R_, P_, 1);
  const int ord = std::max(1, order());
  for (int n = 1; n < f.prec() && n * ord < P_; ++n) {
    power = power * (*this);
    if (f[n]) result = result + power.scaled(f[n]);
  }
  return result;
}

MultiSeries MultiSeries::variable(const Zp& R, int nvars, int prec, int index) {
  MultiSeries s(R, nvars, prec);
  std::vector<int> e(nvars, 0);
  e.at(index) = 1;
  if (prec > 1) s.terms_[key_of(e)] = 1;
  return s;
}

MultiSeries::Key MultiSeries::key_of(const std::vector<int>& exps) {
  if (exps.size() > 8) throw Error(ErrorCode::InvalidArgument, "at most 8 variables");
  Key k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw Error(ErrorCode::PrecisionOverflow, "exponent exceeds 255");
    k |= static_cast<Key>(exps[i]) << (8 * i);
  }
  return k;
}

std::vector<int> MultiSeries::exponents(Key k, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>((k >> (8 * i)) & 0xff);
  return e;
}

int MultiSeries::degree(Key k) {
  int d = 0;
  for (; k; k >>= 8) d += static_cast<int>(k & 0xff);
  return d;
}

u64 MultiSeries::coeff(Key k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

void MultiSeries::add_term(Key k, u64 c) {
  if (degree(k) >= P_) return;
  u64& slot = terms_[k];
  slot = R_.add(slot, c);
  if (!slot) terms_.erase(k);
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  MultiSeries r = *this;
  r.P_ = std::min(P_, o.P_);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

MultiSeries MultiSeries::mul(const MultiSeries& o, std::size_t budget) const {
  const int P = std::min(P_, o.P_);
  MultiSeries r(R_, std::max(n_, o.n_), P);
  // Bucket the right factor by degree so the truncation prunes whole groups.
  std::vector<std::vector<std::pair<Key, u64>>> by_deg(static_cast<std::size_t>(P));
  for (const auto& [k, c] : o.terms_) {
    const int d = degree(k);
    if (d < P) by_deg[d].emplace_back(k, c);
  }
  for (const auto& [ka, ca] : terms_) {
    const int da = degree(ka);
    for (int db = 0; da + db < P; ++db) {
      for (const auto& [kb, cb] : by_deg[db]) {
        u64& slot = r.terms_[ka + kb];
        slot = R_.add(slot, R_.mul(ca, cb));
      }
    }
    if (r.terms_.size() > budget) throw Error(ErrorCode::PrecisionOverflow, "monomial budget exceeded");
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

MultiSeries MultiSeries::scaled(u64 s) const {
  MultiSeries r(R_, n_, P_);
  for (const auto& [k, c] : terms_) {
    const u64 v = R_.mul(c, s);
    if (v) r.terms_[k] = v;
  }
  return r;
}

MultiSeries MultiSeries::widened(int nvars) const {
  MultiSeries r = *this;
  r.n_ = std::max(n_, nvars);
  return r;
}

}  // namespace selmer::formal
