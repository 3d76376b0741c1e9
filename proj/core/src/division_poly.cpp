#include "selmer/division_poly.hpp"

#include "selmer/error.hpp"

namespace selmer {

namespace {

i64 red(const Int& v, u64 ell) { return static_cast<i64>(mod_small(v, ell)); }

}  // namespace

FpPoly DivisionPolynomials::psi_squared(int n) const {
  const FpPoly& fn = f.at(n);
  return n % 2 ? fn * fn : g * fn * fn;
}

std::pair<FpPoly, FpPoly> DivisionPolynomials::multiplication_x(int n) const {
  if (n < 1 || n + 1 >= static_cast<int>(f.size())) throw Error(ErrorCode::InvalidArgument, "index out of range");
  const u64 q = g.modulus();
  FpPoly x(q, {0, 1});
  const FpPoly& fn = f[n];
  FpPoly cross = f[n - 1] * f[n + 1];
  if (n % 2) return {x * fn * fn - g * cross, fn * fn};
  FpPoly den = g * fn * fn;
  return {x * den - cross, den};
}

DivisionPolynomials division_polynomials(const CurveQ& E, u64 ell, int n_max) {
  if (n_max < 4) n_max = 4;
  const i64 b2 = red(E.b2, ell), b4 = red(E.b4, ell), b6 = red(E.b6, ell), b8 = red(E.b8, ell);
  DivisionPolynomials D{FpPoly(ell, {b6, 2 * b4, b2, 4}), {}};
  auto& f = D.f;
  f.reserve(n_max + 1);
  f.push_back(FpPoly(ell));
  f.push_back(FpPoly::constant(ell, 1));
  f.push_back(FpPoly::constant(ell, 1));
  f.push_back(FpPoly(ell, {b8, 3 * b6, 3 * b4, b2, 3}));
  f.push_back(FpPoly(ell, {red(Int(b4) * b8 - Int(b6) * b6, ell), red(Int(b2) * b8 - Int(b4) * b6, ell), 10 * b8,
                           10 * b6, 5 * b4, b2, 2}));
  const FpPoly g2 = D.g * D.g;
  for (int k = 5; k <= n_max; ++k) {
    const int n = k / 2;
    if (k % 2) {
      FpPoly a = f[n + 2] * f[n] * f[n] * f[n];
      FpPoly b = f[n - 1] * f[n + 1] * f[n + 1] * f[n + 1];
      f.push_back(n % 2 == 0 ? g2 * a - b : a - g2 * b);
    } else {
      f.push_back(f[n] * (f[n + 2] * f[n - 1] * f[n - 1] - f[n - 2] * f[n + 1] * f[n + 1]));
    }
  }
  return D;
}

// Frobenius maps each P in E[p] to +-[c]P. The two kernels of phi - c and
// phi + c are subgroups covering E[p], so one of them is everything, and
// phi = -c is excluded because its characteristic polynomial would be (x + c)^2.
bool frobenius_is_scalar(const CurveQ& E, u64 ell, u64 p, u64 c) {
  if (ell == p) throw Error(ErrorCode::InvalidArgument, "ell must differ from p");
  if (p % 2 == 0) throw Error(ErrorCode::InvalidArgument, "p must be odd");
  if (!E.has_good_reduction(ell)) throw Error(ErrorCode::BadReduction, "bad reduction at " + std::to_string(ell));
  c %= p;
  if (c == 0) return false;
  const int k = static_cast<int>(std::min(c, p - c));
  DivisionPolynomials D = division_polynomials(E, ell, static_cast<int>(p) + 1);
  const FpPoly& fp = D.f[p];
  auto [num, den] = D.multiplication_x(k);
  FpPoly xl = powmod(FpPoly(ell, {0, 1}), Int(ell), fp);
  return ((mulmod(xl, den % fp, fp) - num % fp) % fp).is_zero();
}

}  // namespace selmer
