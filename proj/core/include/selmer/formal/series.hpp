#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "selmer/formal/zp.hpp"

namespace selmer::formal {

/// Power series in one variable over Z/p^N, truncated below degree prec.
class UniSeries {
 public:
  UniSeries() = default;
  UniSeries(const Zp& R, int prec) : R_(R), c_(static_cast<std::size_t>(prec), 0) {}

  static UniSeries variable(const Zp& R, int prec);
  static UniSeries constant(const Zp& R, int prec, u64 c);

  const Zp& ring() const { return R_; }
  int prec() const { return static_cast<int>(c_.size()); }
  u64 operator[](int i) const { return i < prec() ? c_[i] : 0; }
  u64& at(int i) { return c_.at(i); }
  const std::vector<u64>& coeffs() const { return c_; }
  /// Lowest index with a nonzero coefficient, prec() if none.
  int order() const;

  UniSeries operator+(const UniSeries& o) const;
  UniSeries operator-(const UniSeries& o) const;
  UniSeries operator*(const UniSeries& o) const;
  UniSeries scaled(u64 s) const;
  UniSeries truncated(int prec) const;
  /// Inverse of a series with unit constant term.
  UniSeries inverse() const;

  friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.c_ == b.c_; }

 private:
  Zp R_;
  std::vector<u64> c_;
};

/// Power series in X, Y over Z/p^N, truncated to total degree < prec.
class BiSeries {
 public:
  BiSeries() = default;
  BiSeries(const Zp& R, int prec) : R_(R), P_(prec), c_(static_cast<std::size_t>(prec) * prec, 0) {}

  static BiSeries x(const Zp& R, int prec);
  static BiSeries y(const Zp& R, int prec);
  static BiSeries constant(const Zp& R, int prec, u64 c);
  /// f(X) or f(Y) viewed as a bivariate series.
  static BiSeries in_x(const UniSeries& f, int prec);
  static BiSeries in_y(const UniSeries& f, int prec);

  const Zp& ring() const { return R_; }
  int prec() const { return P_; }
  u64 operator()(int i, int j) const { return i + j < P_ ? c_[static_cast<std::size_t>(i) * P_ + j] : 0; }
  u64& at(int i, int j) { return c_.at(static_cast<std::size_t>(i) * P_ + j); }

  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator-(const BiSeries& o) const;
  BiSeries operator*(const BiSeries& o) const;
  BiSeries scaled(u64 s) const;
  BiSeries transposed() const;
  BiSeries truncated(int prec) const;
  /// Inverse of a series with constant term 1 and no other terms of degree 0.
  BiSeries inverse_of_unit() const;
  /// Lowest total degree with a nonzero coefficient, prec() if none.
  int order() const;
  /// Sum of f_n * this^n; requires a zero constant term.
  BiSeries substitute_into(const UniSeries& f) const;

  friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.P_ == b.P_ && a.c_ == b.c_; }

 private:
  Zp R_;
  int P_ = 0;
  std::vector<u64> c_;
};

/// Sparse series in up to 8 variables with exponents packed one byte each,
/// truncated to total degree < prec.
class MultiSeries {
 public:
  using Key = std::uint64_t;

  MultiSeries(const Zp& R, int nvars, int prec) : R_(R), n_(nvars), P_(prec) {}

  static MultiSeries variable(const Zp& R, int nvars, int prec, int index);
  static Key key_of(const std::vector<int>& exps);
  static std::vector<int> exponents(Key k, int nvars);
  static int degree(Key k);

  const Zp& ring() const { return R_; }
  int nvars() const { return n_; }
  int prec() const { return P_; }
  std::size_t size() const { return terms_.size(); }
  const std::unordered_map<Key, u64>& terms() const { return terms_; }
  u64 coeff(Key k) const;
  void add_term(Key k, u64 c);

  MultiSeries operator+(const MultiSeries& o) const;
  /// Product truncated to total degree < prec; throws PrecisionOverflow when
  /// the result exceeds budget terms.
  MultiSeries mul(const MultiSeries& o, std::size_t budget) const;
  MultiSeries scaled(u64 s) const;
  /// Same series with one more variable (unused).
  MultiSeries widened(int nvars) const;

 private:
  Zp R_;
  int n_;
  int P_;
  std::unordered_map<Key, u64> terms_;
};

}  // namespace selmer::formal
