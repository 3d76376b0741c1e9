#pragma once

#include <vector>

#include "selmer/formal/local_field.hpp"

namespace selmer::formal {

/// Element of O_L as sum a_j e_j over an integral basis e_0..e_{p-1}.
using LElem = std::vector<KElem>;

struct RamificationData {
  int t = 0;       // v_L(sigma(pi_L) - pi_L) - 1
  int m_diff = 0;  // v_K of the discriminant of the integral basis
};

enum class TowerKind {
  Wild,     // p | m: y^p = c with v_K(c) = 1, basis y^j
  JumpOne,  // p does not divide m, ramified: basis (y - 1)^j / pi^(j-1)
};

/// L_w = K(m^(1/p)) over K = Q_p(zeta_p) for p in {3, 5}, totally ramified.
/// The basis valuations are pairwise distinct mod p, so
/// v_L(sum a_j e_j) = min (p v_K(a_j) + val_j) holds exactly.
class Tower {
 public:
  static Tower build(u64 p, i64 m, int N);

  u64 p() const { return K_.p(); }
  i64 m() const { return m_; }
  TowerKind kind() const { return kind_; }
  const KField& K() const { return K_; }
  int basis_valuation(int j) const { return val_.at(j); }
  /// v_L values below this bound are exact.
  int precision_levels() const { return static_cast<int>(p()) * K_.precision_levels(); }

  LElem zero() const;
  LElem one() const;
  LElem from_K(const KElem& a) const;
  LElem basis(int j) const;

  LElem add(const LElem& a, const LElem& b) const;
  LElem sub(const LElem& a, const LElem& b) const;
  LElem mul(const LElem& a, const LElem& b) const;
  LElem scale(const LElem& a, const KElem& c) const;
  LElem scale(const LElem& a, u64 c) const;
  LElem pow(LElem a, u64 e) const;

  int val(const LElem& a) const;
  bool in_K(const LElem& a) const;

  LElem uniformiser() const { return basis(unif_); }
  LElem sigma(const LElem& a) const;
  LElem sigma_pow(const LElem& a, int k) const;

  /// Trace of the multiplication-by-a matrix.
  KElem trace(const LElem& a) const;
  /// Sum of the Galois conjugates, which must land in K.
  KElem trace_by_conjugates(const LElem& a) const;
  /// Product of the Galois conjugates.
  KElem norm(const LElem& a) const;

  int jump() const;
  /// v_K(det Tr(e_i e_j)), evaluated without division.
  int discriminant_valuation() const;
  RamificationData ramification() const { return {jump(), discriminant_valuation()}; }

 private:
  Tower(const KField& K) : K_(K) {}

  KField K_;
  i64 m_ = 0;
  TowerKind kind_ = TowerKind::Wild;
  std::vector<int> val_;
  std::vector<std::vector<LElem>> T_;  // T_[j][k] = e_j e_k
  std::vector<LElem> S_;               // sigma(e_j)
  std::vector<KElem> traces_;          // Tr(e_j)
  int unif_ = 1;
};

inline Tower build_tower(u64 p, i64 m, int N) { return Tower::build(p, m, N); }

struct TraceIdealRow {
  int n = 0;
  int r = 0;        // min_j v_K(Tr(pi_L^n e_j))
  int formula = 0;  // floor((m_diff + n) / p) with the computed m_diff
};

/// Exponent of Tr(m_L^n) for n = 0..n_max (n_max <= 3p).
std::vector<TraceIdealRow> trace_ideal_check(const Tower& tower, int n_max);

}  // namespace selmer::formal
