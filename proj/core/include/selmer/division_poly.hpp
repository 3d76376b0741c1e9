#pragma once

#include <vector>

#include "selmer/curve.hpp"
#include "selmer/fp_poly.hpp"

namespace selmer {

/// Reduced division polynomials over F_ell: f_n = psi_n for odd n and
/// f_n = psi_n / psi_2 for even n, indices 0..n_max. Valid in every
/// characteristic, including 2 and 3.
struct DivisionPolynomials {
  FpPoly g;               // psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  std::vector<FpPoly> f;  // f[n]

  /// psi_n(x)^2 as a polynomial in x.
  FpPoly psi_squared(int n) const;
  /// Numerator and denominator of x([n]P) = x - psi_{n-1} psi_{n+1} / psi_n^2.
  std::pair<FpPoly, FpPoly> multiplication_x(int n) const;
};

DivisionPolynomials division_polynomials(const CurveQ& E, u64 ell, int n_max);

/// True iff Frobenius acts on E[p] as the scalar c. Requires ell != p, good
/// reduction and c^2 = ell in F_p; compares x^ell with x([c]P) modulo psi_p.
bool frobenius_is_scalar(const CurveQ& E, u64 ell, u64 p, u64 c);

}  // namespace selmer
