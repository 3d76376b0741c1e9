#pragma once

#include <limits>
#include <vector>

#include "selmer/formal/zp.hpp"

namespace selmer::formal {

/// Element of O_K, K = Q_p(zeta_p), as sum c_i pi^i (i < p - 1) with
/// pi = zeta_p - 1 and coefficients mod p^N.
using KElem = std::vector<u64>;

inline constexpr int kValInfinity = std::numeric_limits<int>::max();

class KField {
 public:
  KField(u64 p, int N);

  const Zp& ring() const { return R_; }
  u64 p() const { return R_.p; }
  int N() const { return R_.N; }
  int degree() const { return d_; }
  /// Valuations below this bound are exact: (p - 1) N.
  int precision_levels() const { return d_ * R_.N; }

  KElem zero() const { return KElem(d_, 0); }
  KElem one() const { return from_int(1); }
  KElem from_int(i64 a) const;
  KElem from_int(const Int& a) const;
  KElem pi() const;
  KElem zeta() const;
  /// w with pi^(p-1) = -p w, a unit.
  const KElem& w() const { return w_; }

  KElem add(const KElem& a, const KElem& b) const;
  KElem sub(const KElem& a, const KElem& b) const;
  KElem neg(const KElem& a) const;
  KElem mul(const KElem& a, const KElem& b) const;
  KElem scale(const KElem& a, u64 s) const;
  KElem pow(KElem a, u64 e) const;
  bool is_zero(const KElem& a) const;

  /// v_K(a) = min (p-1) v_p(c_i) + i; kValInfinity when a = 0 mod p^N.
  int val(const KElem& a) const;
  /// a / pi^k, requiring v_K(a) >= k. Loses ceil(k / (p-1)) digits of p-adic precision.
  KElem div_pi_pow(const KElem& a, int k) const;
  /// Inverse of a unit.
  KElem inv_unit(const KElem& a) const;
  /// a / b for v(a) >= v(b).
  KElem div(const KElem& a, const KElem& b) const;
  /// Canonical representative of a mod pi^T.
  KElem truncate(const KElem& a, int T) const;
  /// Leading digit in F_p of a at level ell = v_K(a) (or higher level ell <= v_K(a)).
  u64 digit(const KElem& a, int ell) const;
  /// Same element in a field of lower precision M <= N.
  KElem lower(const KElem& a, const KField& target) const;

 private:
  Zp R_;
  int d_;
  std::vector<u64> relation_;  // pi^(p-1) = sum relation_[i] pi^i
  KElem w_;
  KElem w_inv_;
};

}  // namespace selmer::formal
