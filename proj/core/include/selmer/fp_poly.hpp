#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "selmer/arith.hpp"

namespace selmer {

/// Dense univariate polynomial over the prime field F_q, coefficients stored
/// low degree first with no trailing zeros (the zero polynomial is empty).
class FpPoly {
 public:
  FpPoly(u64 q) : q_(q) {}
  FpPoly(u64 q, std::vector<u64> coeffs);
  FpPoly(u64 q, std::initializer_list<i64> coeffs);

  static FpPoly constant(u64 q, i64 c);
  static FpPoly monomial(u64 q, int degree, i64 c = 1);

  u64 modulus() const { return q_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  u64 eval(u64 x) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(u64 s) const;
  FpPoly derivative() const;
  FpPoly monic() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

 private:
  void trim();

  u64 q_;
  std::vector<u64> c_;
};

struct FpDivMod {
  FpPoly quot;
  FpPoly rem;
};

FpDivMod divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly powmod(const FpPoly& base, Int exp, const FpPoly& m);

}  // namespace selmer
