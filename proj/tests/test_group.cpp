#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zappa/error.hpp"
#include "zappa/group.hpp"
#include "zappa/number_theory.hpp"

using namespace zappa;

TEST_CASE("cyclic groups") {
  const auto z1 = cyclic_group(1);
  CHECK(z1.order() == 1);
  CHECK(z1.table() == std::vector<std::vector<Elem>>{{0}});

  const auto z4 = cyclic_group(4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(3) == 1);
  CHECK(z4.identity() == 0);

  CHECK(order_of(cyclic_group(12), 5) == 12);
  CHECK_THROWS_AS(cyclic_group(0), Error);
  try {
    cyclic_group(0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidOrder);
  }
}

TEST_CASE("element orders") {
  const auto z4 = cyclic_group(4);
  CHECK(order_of(z4, 0) == 1);
  CHECK(order_of(z4, 2) == 2);
  CHECK(order_of(cyclic_group(12), 8) == 3);
  for (std::size_t n : {1, 6, 10, 17}) {
    const auto g = cyclic_group(n);
    for (Elem x = 0; x < n; ++x) CHECK(n % order_of(g, x) == 0);
  }
}

TEST_CASE("subgroups") {
  const auto z4 = cyclic_group(4);
  CHECK(is_subgroup(z4, Subset(z4, {0})));
  CHECK(is_subgroup(z4, Subset(z4, {0, 2})));
  CHECK_FALSE(is_subgroup(z4, Subset(z4, {0, 1})));
  CHECK_THROWS_AS(Subset(z4, {1, 1}), Error);
  CHECK_THROWS_AS(Subset(z4, {4}), Error);

  const auto z12 = cyclic_group(12);
  const Elem gens[] = {8};
  CHECK(generated_subgroup(z12, gens).members() == std::vector<Elem>{0, 4, 8});
}

TEST_CASE("unit groups") {
  auto u8 = unit_group(8);
  CHECK(u8.residues == std::vector<std::uint64_t>{1, 3, 5, 7});
  CHECK(u8.phi == 4);
  auto u9 = unit_group(9);
  CHECK(u9.residues == std::vector<std::uint64_t>{1, 2, 4, 5, 7, 8});
  CHECK(u9.phi == 6);
  auto u1 = unit_group(1);
  CHECK(u1.residues == std::vector<std::uint64_t>{0});
  CHECK(u1.phi == 1);

  for (std::uint64_t m = 2; m <= 200; ++m) {
    const auto u = unit_group(m);
    CHECK(u.phi == oracle::totient_by_scan(m));
    CHECK(nt::euler_phi(m) == u.phi);
    for (auto x : u.residues)
      for (auto y : u.residues) CHECK(oracle::gcd(x * y % m, m) == 1);
  }
}

TEST_CASE("number theory helpers") {
  CHECK(nt::mod(-3, 8) == 5);
  CHECK(nt::pow_mod(4, 3, 9) == 1);
  CHECK(nt::pow_mod(4, 3, 18) == 10);
  for (std::uint64_t m = 1; m < 60; ++m)
    for (std::uint64_t b = 0; b < m; ++b) CHECK(nt::pow_mod(b, 7, m) == oracle::powmod(b, 7, m));
  CHECK(nt::split_two_power(96) == std::pair<unsigned, std::uint64_t>{5, 3});
  CHECK(nt::multiplicative_order(4, 27) == 9);
  CHECK(nt::multiplicative_order(3, 9) == 0);
  CHECK(nt::is_prime(97));
  CHECK_FALSE(nt::is_prime(91));
}

TEST_CASE("order spectra") {
  const auto z4 = cyclic_group(4);
  CHECK(order_spectrum(z4) == OrderSpectrum{{1, 1}, {2, 1}, {4, 2}});
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(order_spectrum(v4) == OrderSpectrum{{1, 1}, {2, 3}});
  const auto s3 = oracle::perm_group({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(order_spectrum(s3) == OrderSpectrum{{1, 1}, {2, 3}, {3, 2}});
  CHECK(order_spectrum(s3) == oracle::spectrum(s3));
}

TEST_CASE("group table validation") {
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(GroupTable(std::vector<std::vector<Elem>>{}), Error);
  // A Latin square with identity that is not associative (order 5 loop).
  std::vector<std::vector<Elem>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_NOTHROW(GroupTable{loop});
  CHECK_FALSE(GroupTable(loop).is_associative());
  CHECK_THROWS_AS(GroupTable(loop, {}, GroupTable::CheckAssociativity::kYes), Error);
  CHECK(cyclic_group(7).is_associative());
  CHECK(cyclic_group(7).is_abelian());
}
