#pragma once

#include <limits>

#include "selmer/arith.hpp"
#include "selmer/error.hpp"

namespace selmer::formal {

/// The ring Z / p^N with residues in [0, p^N).
struct Zp {
  u64 p = 0;
  int N = 0;
  u64 q = 1;  // p^N

  Zp() = default;
  Zp(u64 p_, int N_) : p(p_), N(N_) {
    if (N < 1) throw Error(ErrorCode::PrecisionTooLow, "N must be positive");
    for (int i = 0; i < N; ++i) {
      if (q > std::numeric_limits<u64>::max() / 4 / p) throw Error(ErrorCode::PrecisionOverflow, "p^N exceeds 62 bits");
      q *= p;
    }
  }

  u64 from(i64 a) const { return static_cast<u64>(mod(a, static_cast<i64>(q))); }
  u64 from(const Int& a) const {
    Int r = a % q;
    if (r < 0) r += q;
    return r.convert_to<u64>();
  }
  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % q); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % q;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Inverse of a unit (a not divisible by p).
  u64 inv(u64 a) const {
    if (a % p == 0) throw Error(ErrorCode::InvalidArgument, "not a unit");
    return static_cast<u64>(invmod(static_cast<i64>(a), static_cast<i64>(q)));
  }
  /// p-adic valuation, N for zero.
  int val(u64 a) const {
    if (a == 0) return N;
    int v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  }
  /// Residue in the same ring at lower precision M <= N.
  Zp lowered(int M) const { return Zp(p, M); }
};

}  // namespace selmer::formal
