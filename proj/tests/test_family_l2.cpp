#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zappa/error.hpp"
#include "zappa/family_l2.hpp"

using namespace zappa;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kParse;
}

// (s, t) meeting the four congruences, by direct scan.
std::set<std::pair<std::uint64_t, std::uint64_t>> scan(std::uint64_t m) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t s = 0; s < m; ++s)
    for (std::uint64_t t = 0; t < m; ++t) {
      const bool g1 = (2 * s * s) % m == 2 % m;
      const bool g2 = (4 * t * (s + 1)) % m == 0;
      const bool g3 = (2 * (t + 1) * (s + m - 1)) % m == 0;
      const bool g4 = oracle::gcd(s, m / 2) == 1;
      if (g1 && g2 && g3 && g4) out.emplace(s, t);
    }
  return out;
}

// The product satisfies ab = b^3 a^{2t+1} and a^2 b = b a^{2s}, has order
// 4m and is generated by a and b, so it is the presented group.
void check_relations(const L2Params& p) {
  const auto g = build_zappa(build_l2(p));
  const auto& G = g.group();
  const Elem a = g.embed_k(1), b = g.embed_h(1);
  const auto m = static_cast<std::int64_t>(p.m);
  CHECK(G.order() == 4 * p.m);
  CHECK(oracle::element_order(G, a) == p.m);
  CHECK(oracle::element_order(G, b) == 4);
  CHECK(G.mul(a, b) == G.mul(G.pow(b, 3), G.pow(a, (2 * static_cast<std::int64_t>(p.t) + 1) % m)));
  CHECK(G.mul(G.pow(a, 2), b) == G.mul(b, G.pow(a, 2 * static_cast<std::int64_t>(p.s) % m)));
}

}  // namespace

TEST_CASE("L2 parameter enumeration") {
  for (std::uint64_t m = 2; m <= 32; m += 2) {
    CAPTURE(m);
    std::set<std::pair<std::uint64_t, std::uint64_t>> got;
    for (const auto& tp : enumerate_l2_params(m)) {
      got.emplace(tp.params.s, tp.params.t);
      CHECK((tp.tag == PairTag::kSemidirect) == ((2 * tp.params.t) % m == 0));
    }
    CHECK(got == scan(m));
  }
  for (const auto& tp : enumerate_l2_params(2)) CHECK(tp.tag == PairTag::kSemidirect);

  const auto eight = enumerate_l2_params(8);
  const auto it = std::find_if(eight.begin(), eight.end(), [](const TaggedL2& t) {
    return t.params == L2Params{8, 3, 1};
  });
  REQUIRE(it != eight.end());
  CHECK(it->tag == PairTag::kGenuine);
  CHECK(l2_failed_conditions({8, 3, 1}).empty());
  const auto failed = l2_failed_conditions({8, 2, 1});
  CHECK(std::find(failed.begin(), failed.end(), "G4") != failed.end());

  CHECK(kind_of([] { enumerate_l2_params(7); }) == ErrorKind::kFamilyInapplicable);
  CHECK(kind_of([] { enumerate_l2_params(0); }) == ErrorKind::kFamilyInapplicable);
}

TEST_CASE("L2 action tables") {
  const auto mp = build_l2({8, 3, 1});
  CHECK(mp.twist(1, 1) == 3);
  CHECK(mp.act(1, 1) == 3);
  CHECK(mp.twist(3, 1) == 1);
  CHECK(validate_matched_pair(mp).all_passed());
  CHECK(build_l2_closed_form({8, 3, 1}) == build_l2_by_closure({8, 3, 1}));

  for (std::uint64_t m : {4, 8, 12, 16, 24})
    for (const auto& tp : enumerate_l2_params(m)) {
      CAPTURE(m);
      CAPTURE(tp.params.s);
      CAPTURE(tp.params.t);
      const auto q = build_l2(tp.params);
      CHECK(q.act(2, 1) == 1);
      CHECK(q.twist(2, 1) == (2 * tp.params.s) % m);
      CHECK(validate_matched_pair(q).all_passed());
      check_relations(tp.params);
    }

  CHECK(kind_of([] { build_l2({8, 2, 1}); }) == ErrorKind::kFamilyParam);
  CHECK(kind_of([] { build_l2({7, 1, 1}); }) == ErrorKind::kFamilyParam);
}

TEST_CASE("L2 dispatcher") {
  for (std::uint64_t t : {1, 3, 5, 7}) {
    const auto p = predicted_aut_l2({8, 7, t});
    CHECK(p.status == PredictionStatus::kClassified);
    CHECK(p.order == 64);
    CHECK(p.shape == ChainShape::kEB);
    CHECK(p.c_part * p.m_part * p.b_part == p.order);
  }

  const auto even = predicted_aut_l2({8, 1, 2});
  CHECK(even.status == PredictionStatus::kClassified);
  CHECK(even.order == 4 * 2 * 4 * 2);
  CHECK(even.shape == ChainShape::kFC);

  const auto q = predicted_aut_l2({12, 5, 5});
  CHECK(q.order == 6 * 2 * 4 * 2);
  bool names_4q = q.theorem_id == "4q";
  for (const auto& [id, order] : q.also)
    if (id == "4q") names_4q = order == q.order;
  CHECK(names_4q);

  CHECK(kind_of([] { predicted_aut_l2({8, 1, 0}); }) == ErrorKind::kFamilyInapplicable);
}

TEST_CASE("L2 strata without a group") {
  std::uint64_t strata = 0;
  CHECK(l2_no_group_sweep(512, &strata).empty());
  CHECK(strata > 0);
}
