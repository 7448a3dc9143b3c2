#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zappa::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Non-negative residue of `x` modulo `m` (m >= 1).
constexpr u64 mod(i64 x, u64 m) {
  const i64 r = x % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

u64 gcd(u64 a, u64 b);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Euler totient from the factorization, phi(1) = 1.
u64 euler_phi(u64 n);

bool is_prime(u64 n);

/// Splits n = 2^k * odd and returns (k, odd). n must be nonzero.
std::pair<unsigned, u64> split_two_power(u64 n);

/// Multiplicative order of x modulo m; 0 when gcd(x, m) != 1.
u64 multiplicative_order(u64 x, u64 m);

}  // namespace zappa::nt
