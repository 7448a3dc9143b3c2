#include "zappa/number_theory.hpp"

#include <numeric>

namespace zappa::nt {

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1u) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1u;
  }
  return static_cast<u64>(result);
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    phi = phi / p * (p - 1);
  }
  return phi;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().second == 1;
}

std::pair<unsigned, u64> split_two_power(u64 n) {
  unsigned k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return {k, n};
}

u64 multiplicative_order(u64 x, u64 m) {
  if (m == 1) return 1;
  x %= m;
  if (gcd(x, m) != 1) return 0;
  u64 k = 1;
  u64 y = x;
  while (y != 1) {
    y = static_cast<u64>((static_cast<unsigned __int128>(y) * x) % m);
    ++k;
  }
  return k;
}

}  // namespace zappa::nt
