#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace selmer {

using Int = boost::multiprecision::cpp_int;

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// (prime, exponent) pairs in increasing prime order.
template <typename T>
using Factorization = std::vector<std::pair<T, int>>;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
i64 mod(i64 a, i64 m);
/// Inverse of a modulo m; a must be coprime to m.
i64 invmod(i64 a, i64 m);

bool is_prime(u64 n);
bool is_prime(const Int& n);

/// Full factorization of |n| (n != 0).
Factorization<u64> factor(u64 n);
Factorization<Int> factor(const Int& n);

/// Exponent of the prime ell in n; n must be nonzero.
int valuation(const Int& n, u64 ell);
int valuation(i64 n, u64 ell);

/// n mod ell in [0, ell).
u64 mod_small(const Int& n, u64 ell);

/// Multiplicative order of a modulo the prime p (a coprime to p).
int multiplicative_order(u64 a, u64 p);

Int ipow(const Int& base, unsigned exp);
u64 ipow_u64(u64 base, unsigned exp);

/// Largest divisor of n that is p-th power free together with the removed
/// factors, i.e. n = core * prod(q^(p*k)).
struct PthPowerFree {
  i64 core;
  Factorization<u64> removed;  // (q, k) meaning q^(p*k) was divided out
};
PthPowerFree pth_power_free_part(i64 n, int p);
bool is_pth_power_free(i64 n, int p);

std::vector<u64> primes_up_to(u64 bound);

}  // namespace selmer
