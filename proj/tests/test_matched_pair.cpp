#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zappa/error.hpp"
#include "zappa/matched_pair.hpp"

using namespace zappa;

namespace {

MatchedPair trivial_pair(std::size_t nh, std::size_t nk) {
  std::vector<std::vector<Elem>> sigma(nk, std::vector<Elem>(nh));
  std::vector<std::vector<Elem>> theta(nk, std::vector<Elem>(nh));
  for (Elem k = 0; k < nk; ++k)
    for (Elem h = 0; h < nh; ++h) {
      sigma[k][h] = h;
      theta[k][h] = k;
    }
  return MatchedPair(cyclic_group(nh), cyclic_group(nk), sigma, theta);
}

// Z_2 = <y> acting on nothing, Z_3 = <x> twisted by y: x^y = x^2.
MatchedPair s3_pair() {
  std::vector<std::vector<Elem>> sigma = {{0, 1}, {0, 1}, {0, 1}};
  std::vector<std::vector<Elem>> theta = {{0, 0}, {1, 2}, {2, 1}};
  return MatchedPair(cyclic_group(2), cyclic_group(3), sigma, theta);
}

}  // namespace

TEST_CASE("validation of trivial and corrupted pairs") {
  const auto mp = trivial_pair(2, 2);
  const auto rep = validate_matched_pair(mp);
  CHECK(rep.all_passed());
  CHECK(rep.conditions.size() == 6);

  auto sigma = mp.sigma_table();
  sigma[1][0] = 1;
  const MatchedPair bad(mp.h(), mp.k(), sigma, mp.theta_table());
  const auto r2 = validate_matched_pair(bad);
  CHECK_FALSE(r2.all_passed());
  const auto* c2 = r2.find("C2");
  REQUIRE(c2 != nullptr);
  CHECK_FALSE(c2->passed);
  REQUIRE(c2->witnesses.size() == 1);
  CHECK(c2->witnesses[0] == std::vector<Elem>{1, 0});
  CHECK(r2.find("C1")->passed);

  const auto all = validate_matched_pair(bad, WitnessMode::kAll);
  std::size_t first_count = 0, all_count = 0;
  for (const auto& c : r2.conditions) first_count += c.witnesses.size();
  for (const auto& c : all.conditions) all_count += c.witnesses.size();
  CHECK(all_count > first_count);

  CHECK_THROWS_AS(MatchedPair(cyclic_group(2), cyclic_group(2), {{0, 1}}, {{0, 0}, {1, 1}}), Error);
  CHECK_THROWS_AS(MatchedPair(cyclic_group(2), cyclic_group(2), {{0, 1}, {0, 2}}, {{0, 0}, {1, 1}}),
                  Error);
}

TEST_CASE("product construction") {
  const auto g = build_zappa(trivial_pair(4, 8));
  CHECK(g.group().order() == 32);
  CHECK(g.group().is_abelian());
  CHECK(order_spectrum(g.group()) ==
        oracle::spectrum(direct_product(cyclic_group(4), cyclic_group(8))));

  const auto s3 = build_zappa(s3_pair());
  CHECK(s3.group().order() == 6);
  CHECK_FALSE(s3.group().is_abelian());
  CHECK(order_spectrum(s3.group()) == OrderSpectrum{{1, 1}, {2, 3}, {3, 2}});
  for (Elem x = 0; x < 6; ++x) {
    const auto [h, k] = s3.factor(x);
    CHECK(s3.element(h, k) == x);
    CHECK(s3.group().mul(s3.embed_h(h), s3.embed_k(k)) == x);
  }
  CHECK(is_subgroup(s3.group(), s3.h_subgroup()));
  CHECK(is_subgroup(s3.group(), s3.k_subgroup()));
  CHECK(intersect(s3.group(), s3.h_subgroup(), s3.k_subgroup()).size() == 1);

  auto theta = s3_pair().theta_table();
  theta[1][1] = 1;
  const MatchedPair broken(cyclic_group(2), cyclic_group(3), s3_pair().sigma_table(), theta);
  try {
    build_zappa(broken);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMatchedPairInvalid);
  }
}

TEST_CASE("internal factorizations") {
  const auto z6 = cyclic_group(6);
  const auto mp = matched_pair_from_internal(z6, Subset(z6, {0, 3}), Subset(z6, {0, 2, 4}));
  CHECK(is_semidirect(mp) == ProductKind::kDirect);
  CHECK(validate_matched_pair(mp).all_passed());

  const auto s3 = oracle::perm_group({{1, 0, 2}, {1, 2, 0}});
  std::vector<Elem> transposition, rotation;
  for (Elem x = 0; x < 6; ++x) {
    if (order_of(s3, x) == 2 && transposition.empty()) transposition = {s3.identity(), x};
    if (order_of(s3, x) == 3) rotation.push_back(x);
  }
  rotation.push_back(s3.identity());
  const auto sp = matched_pair_from_internal(s3, Subset(s3, transposition), Subset(s3, rotation));
  CHECK(validate_matched_pair(sp).all_passed());
  const auto hom = action_homomorphy(sp);
  CHECK(hom.sigma_trivial);
  CHECK_FALSE(hom.theta_trivial);
  CHECK(is_semidirect(sp) == ProductKind::kRightSemidirect);

  const auto z4 = cyclic_group(4);
  try {
    matched_pair_from_internal(z4, Subset(z4, {0, 2}), Subset(z4, {0, 2}));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotZappaFactorization);
  }
}

TEST_CASE("round trip through the product") {
  for (const auto& mp : {trivial_pair(3, 4), s3_pair()}) {
    const auto g = build_zappa(mp);
    CHECK(matched_pair_from_internal(g.group(), g.h_subgroup(), g.k_subgroup()) == mp);
  }
}

TEST_CASE("extension from seeds") {
  const auto h = cyclic_group(2);
  const auto k = cyclic_group(3);
  const auto mp = extend_matched_pair(h, k, {{1, 1, 1, 2}});
  CHECK(mp == s3_pair());

  CHECK_THROWS_AS(extend_matched_pair(h, k, {}), Error);  // seeds determine nothing off the axes
  CHECK_THROWS_AS(extend_matched_pair(h, k, {{1, 1, 1, 2}, {2, 1, 1, 2}}), Error);
}

TEST_CASE("semidirect classification") {
  CHECK(is_semidirect(trivial_pair(2, 2)) == ProductKind::kDirect);
  CHECK(is_semidirect(s3_pair()) == ProductKind::kRightSemidirect);
  CHECK_FALSE(action_homomorphy(trivial_pair(2, 3)).needs_review());
  CHECK(std::string(to_string(ProductKind::kGenuine)) == "genuine");
}
