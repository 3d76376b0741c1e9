#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "selmer/curve.hpp"
#include "selmer/formal/series.hpp"

namespace selmer::formal {

inline constexpr int kDefaultMaxPrec = 60;
inline constexpr int kDefaultCoefficientPrecision = 12;

/// A one-parameter commutative formal group law F(X, Y) over Z/p^N,
/// truncated to total degree < prec.
struct FormalGroup {
  std::string name;
  BiSeries F;

  const Zp& ring() const { return F.ring(); }
  int prec() const { return F.prec(); }
};

/// Law of the formal group of E at the parameter z = -x/y.
FormalGroup formal_group_of_curve(const CurveQ& E, u64 p, int prec, int N = kDefaultCoefficientPrecision,
                                  int max_prec = kDefaultMaxPrec);
/// X + Y + XY.
FormalGroup multiplicative_formal_group(u64 p, int prec, int N = kDefaultCoefficientPrecision);
/// X + Y.
FormalGroup additive_formal_group(u64 p, int prec, int N = kDefaultCoefficientPrecision);

struct AxiomReport {
  bool identity = false;
  bool commutative = false;
  bool associative = false;
  int prec = 0;

  bool ok() const { return identity && commutative && associative; }
};

AxiomReport check_axioms(const FormalGroup& G);

/// A(X), B(X) substituted into F.
UniSeries compose(const FormalGroup& G, const UniSeries& A, const UniSeries& B);
/// The series i(X) with F(X, i(X)) = 0.
UniSeries inverse_series(const FormalGroup& G);
/// [n]_F(X) for n >= 0.
UniSeries multiplication_by(const FormalGroup& G, int n);
inline UniSeries multiplication_by_p(const FormalGroup& G) { return multiplication_by(G, static_cast<int>(G.ring().p)); }

inline constexpr int kHeightInfinity = std::numeric_limits<int>::max();

/// Height of F mod p. Returns kHeightInfinity when [p] vanishes mod p beyond
/// degree p^2, and throws InconclusivePrecision when prec <= p^2 leaves it open.
int height(const FormalGroup& G);

/// F_n(X_1, ..., X_n) = Tr(X_1) + sum a_i (X_1...X_n)^i + sum_M a_M Tr(M),
/// where Tr(M) runs over the cyclic shifts of M.
struct NormExpansion {
  int n = 0;
  int prec = 0;
  std::vector<u64> linear;                  // coefficient of X_k, k = 1..n
  std::vector<u64> diagonal;                // diagonal[i] = a_i for n*i < prec; diagonal[0] = 0
  std::map<std::vector<int>, u64> tail;     // least cyclic shift -> a_M
  bool orbit_constant = true;               // coefficients agree along every cyclic orbit
  std::size_t terms = 0;

  /// p-adic valuation of a_i, N when a_i vanishes to working precision.
  int diagonal_valuation(int i, const Zp& R) const { return R.val(diagonal.at(i)); }
};

inline constexpr std::size_t kDefaultMonomialBudget = 2'000'000;

NormExpansion symmetric_norm_series(const FormalGroup& G, int n, int prec,
                                    std::size_t budget = kDefaultMonomialBudget);

}  // namespace selmer::formal
