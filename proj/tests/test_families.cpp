#include <algorithm>
#include <vector>

#include "doctest.h"
#include "zappa/automorphism.hpp"
#include "zappa/error.hpp"
#include "zappa/families.hpp"
#include "zappa/family_l2.hpp"

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

struct Fixture {
  ZSGroup g;
  MatrixGroup group;
  Families fam;
  explicit Fixture(const MatchedPair& mp)
      : g(build_zappa(mp)), group(g, brute_force_aut(g)), fam(compute_families(group)) {}
};

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("families of a direct product") {
  const Fixture f(trivial_pair(4, 8));
  const auto& mp = f.g.pair();

  const auto& a = f.fam.at(FamilyId::A);
  CHECK(a.order() >= 2);
  auto inversion = identity_matrix(mp);
  inversion.alpha.tbl = {0, 3, 2, 1};
  const auto inv_idx = f.group.index_of(inversion);
  REQUIRE(inv_idx);
  CHECK(contains(a.members, *inv_idx));

  for (FamilyId id : kAllFamilies) {
    const auto& r = f.fam.at(id);
    CHECK(contains(r.members, f.group.identity()));
    CHECK(r.is_subgroup);
  }
  CHECK(verify_ABCD(f.group, f.fam).verdict());
  CHECK(f.fam.at(FamilyId::B).order() > 1);
}

TEST_CASE("chain with trivial B") {
  // Hom(Z_4, Z_3) = 0, so B = 1 and E is everything
  const Fixture f(trivial_pair(3, 4));
  CHECK(f.group.size() == 4);
  CHECK(f.fam.at(FamilyId::B).order() == 1);
  CHECK(f.fam.at(FamilyId::E).order() == 4);
  CHECK(verify_semidirect_chain(f.group, f.fam, "EB").verdict());
  CHECK(verify_ABCD(f.group, f.fam).verdict());
}

TEST_CASE("family names") {
  CHECK(parse_family("A") == FamilyId::A);
  CHECK(to_string(FamilyId::Z) == "Z");
  CHECK(matrix_family_of(FamilyId::P) == FamilyId::A);
  CHECK(matrix_family_of(FamilyId::Y) == FamilyId::F);
  bool threw = false;
  try {
    parse_family("W");
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::kUnknownFamily;
  }
  CHECK(threw);
  CHECK_THROWS_AS(Families{}.at(FamilyId::A), Error);
}

TEST_CASE("families of L2(8,7,1)") {
  const Fixture f(build_l2({8, 7, 1}));
  CHECK(f.group.size() == 64);
  CHECK(f.fam.at(FamilyId::B).order() == 2);
  CHECK(contains(f.fam.at(FamilyId::D).members, f.group.identity()));
  for (FamilyId id : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E, FamilyId::F, FamilyId::M})
    CHECK(f.fam.at(id).is_subgroup);

  const auto eb = verify_semidirect_chain(f.group, f.fam, "EB");
  CHECK(eb.verdict());
  CHECK(f.fam.at(FamilyId::E).order() * f.fam.at(FamilyId::B).order() == 64);
  CHECK(verify_semidirect_chain(f.group, f.fam, "CM").verdict());
  CHECK(verify_ABCD(f.group, f.fam).verdict());

  // A and D normalize B and C
  for (FamilyId by : {FamilyId::A, FamilyId::D})
    for (FamilyId target : {FamilyId::B, FamilyId::C})
      CHECK(normalizes(f.group, f.fam.at(by).members, f.fam.at(target).members));
}

TEST_CASE("ABCD at L2(8,3,1)") {
  const Fixture f(build_l2({8, 3, 1}));
  const auto rep = verify_ABCD(f.group, f.fam);
  CHECK(rep.verdict());
  CHECK(rep.factors == std::vector<FamilyId>{FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D});
}

TEST_CASE("map families against their matrix sets") {
  const Fixture f(build_l2({8, 7, 1}));
  for (const auto& c : cross_check_families(f.group, f.fam)) {
    CAPTURE(to_string(c.map_family));
    CHECK(c.filters_agree);
  }
  const auto rf = check_reduced_forms(f.group);
  CHECK(rf.q_agrees());
}

TEST_CASE("stabilizers") {
  const auto direct = trivial_pair(4, 8);
  CHECK(stab_h_of_k(direct).size() == 4);
  CHECK(stab_k_of_h(direct).size() == 8);
  const auto mp = build_l2({8, 3, 1});
  // a^2 fixes b, a does not
  const auto sk = stab_k_of_h(mp);
  CHECK(sk.contains(2));
  CHECK_FALSE(sk.contains(1));
}
