#include "selmer/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "selmer/error.hpp"

namespace selmer {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 invmod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    i64 q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw Error(ErrorCode::InvalidArgument, "invmod: argument not invertible");
  return mod(x, m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) return is_prime(n.convert_to<u64>());
  static std::mt19937_64 rng(0x5e1e5eedULL);
  return boost::multiprecision::miller_rabin_test(n, 40, rng);
}

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n);
  while (true) {
    u64 y = rng() % n, c = rng() % (n - 1) + 1, m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

Int pollard_rho_big(const Int& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = boost::multiprecision::gcd(x > y ? Int(x - y) : Int(y - x), n);
    }
    if (d != n) return d;
  }
}

void factor_rec_big(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (n <= std::numeric_limits<u64>::max()) {
    std::map<u64, int> small;
    factor_rec(n.convert_to<u64>(), small);
    for (auto [q, e] : small) out[Int(q)] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho_big(n);
  factor_rec_big(d, out);
  factor_rec_big(n / d, out);
}

}  // namespace

Factorization<u64> factor(u64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "factor(0)");
  std::map<u64, int> acc;
  for (u64 q = 2; q < 1000 && q * q <= n; ++q) {
    while (n % q == 0) {
      ++acc[q];
      n /= q;
    }
  }
  factor_rec(n, acc);
  return {acc.begin(), acc.end()};
}

Factorization<Int> factor(const Int& n_in) {
  if (n_in == 0) throw Error(ErrorCode::InvalidArgument, "factor(0)");
  Int n = abs(n_in);
  std::map<Int, int> acc;
  for (u64 q = 2; q < 100000 && Int(q) * q <= n; ++q) {
    while (n % q == 0) {
      ++acc[Int(q)];
      n /= q;
    }
  }
  factor_rec_big(n, acc);
  return {acc.begin(), acc.end()};
}

int valuation(const Int& n, u64 ell) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  int v = 0;
  Int m = n;
  while (m % ell == 0) {
    m /= ell;
    ++v;
  }
  return v;
}

int valuation(i64 n, u64 ell) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  int v = 0;
  u64 m = static_cast<u64>(n < 0 ? -n : n);
  while (m % ell == 0) {
    m /= ell;
    ++v;
  }
  return v;
}

u64 mod_small(const Int& n, u64 ell) {
  Int r = n % ell;
  if (r < 0) r += ell;
  return r.convert_to<u64>();
}

int multiplicative_order(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "order of zero");
  int order = 1;
  u64 x = a;
  while (x != 1) {
    x = mulmod(x, a, p);
    ++order;
  }
  return order;
}

Int ipow(const Int& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

u64 ipow_u64(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

PthPowerFree pth_power_free_part(i64 n, int p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "pth_power_free_part(0)");
  PthPowerFree out{n < 0 ? -1 : 1, {}};
  for (auto [q, e] : factor(static_cast<u64>(n < 0 ? -n : n))) {
    if (e >= p) out.removed.emplace_back(q, e / p);
    out.core *= static_cast<i64>(ipow_u64(q, static_cast<unsigned>(e % p)));
  }
  return out;
}

bool is_pth_power_free(i64 n, int p) { return pth_power_free_part(n, p).removed.empty(); }

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (u64 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

}  // namespace selmer
