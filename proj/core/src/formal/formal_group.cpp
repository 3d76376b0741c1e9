#include "selmer/formal/formal_group.hpp"

#include <algorithm>

namespace selmer::formal {

namespace {

void check_prec(int prec, int max_prec) {
  if (prec < 2) throw Error(ErrorCode::PrecisionTooLow, "precision must be at least 2");
  if (prec > max_prec) throw Error(ErrorCode::PrecisionOverflow, std::to_string(prec) + " > " + std::to_string(max_prec));
}

UniSeries uni_x(const Zp& R, int P) { return UniSeries::variable(R, P); }

}  // namespace

FormalGroup formal_group_of_curve(const CurveQ& E, u64 p, int prec, int N, int max_prec) {
  check_prec(prec, max_prec);
  if (!E.has_good_reduction(p)) throw Error(ErrorCode::BadAtP, "bad reduction at p = " + std::to_string(p));
  const Zp R(p, N);
  const int P = prec;
  const u64 a1 = R.from(E.a1), a2 = R.from(E.a2), a3 = R.from(E.a3), a4 = R.from(E.a4), a6 = R.from(E.a6);

  // w(z) = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3, one degree per pass.
  // One extra degree so that the chord slope below is exact to total degree P.
  const int Pw = P + 1;
  UniSeries z = uni_x(R, Pw);
  UniSeries z2 = z * z, z3 = z2 * z;
  UniSeries w(R, Pw);
  for (int it = 0; it < Pw; ++it) {
    UniSeries w2 = w * w;
    w = z3 + (z * w).scaled(a1) + (z2 * w).scaled(a2) + w2.scaled(a3) + (z * w2).scaled(a4) + (w2 * w).scaled(a6);
  }

  // Chord through z1, z2: slope (w(z2) - w(z1))/(z2 - z1) and intercept.
  BiSeries lambda(R, P);
  for (int i = 0; i < P; ++i)
    for (int j = 0; i + j < P; ++j) lambda.at(i, j) = w[i + j + 1];
  const BiSeries X = BiSeries::x(R, P), Y = BiSeries::y(R, P);
  const BiSeries nu = BiSeries::in_x(w, P) - lambda * X;
  const BiSeries l2 = lambda * lambda, l3 = l2 * lambda;
  // Substituting w = lambda z + nu into the curve gives a cubic in z whose
  // roots are z1, z2, z3; read z3 off the z^2 coefficient.
  const BiSeries num = lambda.scaled(a1) + nu.scaled(a2) + l2.scaled(a3) + (lambda * nu).scaled(R.mul(2, a4)) +
                       (l2 * nu).scaled(R.mul(3, a6));
  const BiSeries den = BiSeries::constant(R, P, 1) + lambda.scaled(a2) + l2.scaled(a4) + l3.scaled(a6);
  const BiSeries z3b = (X + Y + num * den.inverse_of_unit()).scaled(R.neg(1));

  // F = i(z3) with i(z) = -z / (1 - a1 z - a3 w(z)).
  const BiSeries wz3 = z3b.substitute_into(w.truncated(P));
  const BiSeries denom = BiSeries::constant(R, P, 1) - z3b.scaled(a1) - wz3.scaled(a3);
  FormalGroup G{"curve", (z3b * denom.inverse_of_unit()).scaled(R.neg(1))};
  return G;
}

FormalGroup multiplicative_formal_group(u64 p, int prec, int N) {
  check_prec(prec, 1 << 12);
  const Zp R(p, N);
  BiSeries F(R, prec);
  F.at(1, 0) = 1;
  F.at(0, 1) = 1;
  if (prec > 2) F.at(1, 1) = 1;
  return {"multiplicative", F};
}

FormalGroup additive_formal_group(u64 p, int prec, int N) {
  check_prec(prec, 1 << 12);
  const Zp R(p, N);
  BiSeries F(R, prec);
  F.at(1, 0) = 1;
  F.at(0, 1) = 1;
  return {"additive", F};
}

AxiomReport check_axioms(const FormalGroup& G) {
  const BiSeries& F = G.F;
  const Zp& R = G.ring();
  const int P = F.prec();
  AxiomReport rep;
  rep.prec = P;

  rep.identity = true;
  for (int i = 0; i < P; ++i) {
    const u64 want = i == 1 ? 1 : 0;
    if (F(i, 0) != want || F(0, i) != want) rep.identity = false;
  }
  rep.commutative = F == F.transposed();

  // F(X, F(Y, Z)) = sum_i X^i A_i(Y, Z) and F(F(X, Y), Z) = sum_j Z^j B_j(X, Y),
  // with A_i = sum_j c_ij F^j and B_j = sum_i c_ij F^i. Compare X^i Y^a Z^b.
  std::vector<BiSeries> pw{BiSeries::constant(R, P, 1)};
  for (int k = 1; k < P; ++k) pw.push_back(pw.back() * F);
  auto combine = [&](bool by_row, int idx) {
    BiSeries out(R, P - idx);
    for (int k = 0; idx + k < P; ++k) {
      const u64 c = by_row ? F(idx, k) : F(k, idx);
      if (!c) continue;
      for (int a = 0; a < P - idx; ++a)
        for (int b = 0; a + b < P - idx; ++b)
          if (pw[k](a, b)) out.at(a, b) = R.add(out(a, b), R.mul(c, pw[k](a, b)));
    }
    return out;
  };
  std::vector<BiSeries> A, B;
  for (int i = 0; i < P; ++i) {
    A.push_back(combine(true, i));
    B.push_back(combine(false, i));
  }
  rep.associative = true;
  for (int i = 0; i < P && rep.associative; ++i)
    for (int a = 0; i + a < P && rep.associative; ++a)
      for (int b = 0; i + a + b < P; ++b)
        if (A[i](a, b) != B[b](i, a)) {
          rep.associative = false;
          break;
        }
  return rep;
}

UniSeries compose(const FormalGroup& G, const UniSeries& A, const UniSeries& B) {
  const Zp& R = G.ring();
  const int P = std::min({G.prec(), A.prec(), B.prec()});
  std::vector<UniSeries> ap{UniSeries::constant(R, P, 1)}, bp{UniSeries::constant(R, P, 1)};
  const UniSeries a = A.truncated(P), b = B.truncated(P);
  for (int k = 1; k < P; ++k) {
    ap.push_back(ap.back() * a);
    bp.push_back(bp.back() * b);
  }
  UniSeries out(R, P);
  for (int j = 0; j < P; ++j) {
    UniSeries inner(R, P);
    bool any = false;
    for (int i = 0; i + j < P; ++i) {
      const u64 c = G.F(i, j);
      if (!c) continue;
      inner = inner + ap[i].scaled(c);
      any = true;
    }
    if (any) out = out + inner * bp[j];
  }
  return out;
}

UniSeries inverse_series(const FormalGroup& G) {
  const Zp& R = G.ring();
  const int P = G.prec();
  const UniSeries X = uni_x(R, P);
  UniSeries y = X.scaled(R.neg(1));
  // F(X, y) = X + y + h(X, y) with h of degree >= 2, so y <- y - F(X, y)
  // raises the order of F(X, y) by at least one per pass.
  for (int it = 0; it < P; ++it) {
    UniSeries r = compose(G, X, y);
    if (r.order() >= P) break;
    y = y - r;
  }
  return y;
}

UniSeries multiplication_by(const FormalGroup& G, int n) {
  const Zp& R = G.ring();
  const int P = G.prec();
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  const UniSeries X = uni_x(R, P);
  UniSeries acc(R, P);
  for (int k = 0; k < n; ++k) acc = compose(G, acc, X);
  return acc;
}

int height(const FormalGroup& G) {
  const u64 p = G.ring().p;
  const UniSeries mp = multiplication_by_p(G);
  for (int i = 1; i < mp.prec(); ++i) {
    if (mp[i] % p == 0) continue;
    int h = 0;
    u64 k = static_cast<u64>(i);
    while (k % p == 0) {
      k /= p;
      ++h;
    }
    if (k != 1) throw Error(ErrorCode::InvalidArgument, "leading term of [p] is not a p-power degree");
    return h;
  }
  if (static_cast<u64>(mp.prec()) <= p * p)
    throw Error(ErrorCode::InconclusivePrecision, "[p] vanishes mod p below degree " + std::to_string(mp.prec()));
  return kHeightInfinity;
}

NormExpansion symmetric_norm_series(const FormalGroup& G, int n, int prec, std::size_t budget) {
  if (n < 1 || n > 8) throw Error(ErrorCode::InvalidArgument, "n must lie in 1..8");
  if (prec > G.prec()) throw Error(ErrorCode::PrecisionTooLow, "formal group known only below degree " + std::to_string(G.prec()));
  const Zp& R = G.ring();
  using MS = MultiSeries;

  MS cur = MS::variable(R, n, prec, 0);
  for (int k = 1; k < n; ++k) {
    // F_{k+1} = sum_{i,j} c_ij F_k^i X_{k+1}^j.
    std::vector<MS> pw{MS(R, n, prec)};
    pw[0].add_term(0, 1);
    for (int i = 1; i < prec; ++i) pw.push_back(pw.back().mul(cur, budget));
    MS next(R, n, prec);
    for (int i = 0; i < prec; ++i) {
      for (const auto& [key, c] : pw[i].terms()) {
        const int d = MS::degree(key);
        for (int j = 0; i + j < prec && d + j < prec; ++j) {
          const u64 cij = G.F(i, j);
          if (cij) next.add_term(key + (static_cast<MS::Key>(j) << (8 * k)), R.mul(c, cij));
        }
      }
      if (next.size() > budget) throw Error(ErrorCode::PrecisionOverflow, "monomial budget exceeded");
    }
    cur = std::move(next);
  }

  NormExpansion out;
  out.n = n;
  out.prec = prec;
  out.terms = cur.size();
  for (int k = 0; k < n; ++k) {
    std::vector<int> e(n, 0);
    e[k] = 1;
    out.linear.push_back(cur.coeff(MS::key_of(e)));
  }
  out.diagonal.assign(1, 0);
  for (int i = 1; n * i < prec; ++i) out.diagonal.push_back(cur.coeff(MS::key_of(std::vector<int>(n, i))));

  for (const auto& [key, c] : cur.terms()) {
    std::vector<int> e = MS::exponents(key, n);
    const int nonzero = static_cast<int>(std::count_if(e.begin(), e.end(), [](int x) { return x != 0; }));
    const bool diag = std::all_of(e.begin(), e.end(), [&](int x) { return x == e[0]; });
    if (diag || (nonzero == 1 && MS::degree(key) == 1)) continue;
    std::vector<int> best = e, rot = e;
    for (int r = 1; r < n; ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      best = std::min(best, rot);
      if (cur.coeff(MS::key_of(rot)) != c) out.orbit_constant = false;
    }
    out.tail[best] = c;
  }
  return out;
}

}  // namespace selmer::formal
