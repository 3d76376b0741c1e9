#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "selmer/curve.hpp"
#include "selmer/formal/formal_group.hpp"
#include "selmer/formal/tower.hpp"

namespace selmer::formal {

/// The finite group F(m_K)/F(m_K^T), elements stored as canonical
/// representatives mod pi^T.
class TruncatedGroup {
 public:
  TruncatedGroup(const FormalGroup& G, const KField& K, int T);

  int T() const { return T_; }
  const KField& K() const { return K_; }
  KElem reduce(const KElem& x) const { return K_.truncate(x, T_); }
  KElem add(const KElem& x, const KElem& y) const;
  KElem negate(const KElem& x) const;
  KElem multiple(const KElem& x, u64 n) const;
  /// Filtration level v_K(x), T for the identity.
  int level(const KElem& x) const;

 private:
  const FormalGroup& G_;
  const KField& K_;
  int T_;
  UniSeries inv_;
};

/// F(x, y) for x, y in m_L, dropping terms of total degree >= max_degree.
LElem fg_add(const FormalGroup& G, const Tower& tower, const LElem& x, const LElem& y, int max_degree);

/// N_F(x) = F(x, sigma x, ..., sigma^(p-1) x), exact modulo m_L^max_degree.
LElem fg_norm(const FormalGroup& G, const Tower& tower, const LElem& x, int max_degree);

/// N_F(pi_L^k) mod pi_K^T for k = 1..pT-1; these generate the norm image in
/// F(m_K)/F(m_K^T).
std::vector<KElem> norm_generators(const FormalGroup& G, const Tower& tower, int T);

struct CokernelRun {
  int dim = 0;
  int N = 0;
  int T = 0;
  int image_levels = 0;
  std::size_t generators = 0;
};

/// dim_Fp F(m_K) / <N_F(F(m_L)), F(m_K^T)> by filtration echelon closure.
/// G must be known to total degree >= pT.
CokernelRun norm_cokernel_dimension(const FormalGroup& G, const Tower& tower, int T);

/// Which formal group to rebuild at each precision.
struct FormalGroupSpec {
  enum class Kind { Curve, Multiplicative, Additive };
  Kind kind = Kind::Curve;
  std::optional<CurveQ> curve;

  static FormalGroupSpec of_curve(const CurveQ& E) { return {Kind::Curve, E}; }
  static FormalGroupSpec multiplicative() { return {Kind::Multiplicative, std::nullopt}; }
  FormalGroup build(u64 p, int prec, int N) const;
};

struct CokernelResult {
  int dim = 0;
  RamificationData ramification;
  CokernelRun primary;
  CokernelRun check;
};

inline int default_truncation(int t, u64 p) { return t + static_cast<int>(p) + 2; }

/// Runs at (N, T) and (N + 2, T + 2); throws TruncationTooSmall if they differ.
CokernelResult norm_cokernel_stable(const FormalGroupSpec& spec, u64 p, i64 m,
                                    int N = kDefaultCoefficientPrecision, std::optional<int> T = std::nullopt);

/// [f, min(f (t - 1), deg + 2)] for t >= 2, and [0, 0] for t = 1.
std::pair<int, int> cokernel_bounds(int t, int f, int deg);

struct NormIdentityCheck {
  int difference_val = 0;  // v_K(N_F(x) - Tr(x) - sum a_i N(x)^i)
  int ideal_val = 0;       // v_K of Tr(x^2 O_L)
  bool ok = false;
};

/// N_F(x) = Tr(x) + sum a_i N(x)^i mod Tr(x^2 O_L), with a_i from ex (n = p).
NormIdentityCheck norm_identity_check(const FormalGroup& G, const NormExpansion& ex, const Tower& tower,
                                      const LElem& x);

}  // namespace selmer::formal
