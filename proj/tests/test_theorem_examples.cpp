// Worked examples of the decomposition and order theorems for M3(3, 9).
#include <sstream>

#include "doctest.h"
#include "zappa/automorphism.hpp"
#include "zappa/cli.hpp"
#include "zappa/families.hpp"
#include "zappa/family_m3.hpp"
#include "zappa/serialize.hpp"

using namespace zappa;

namespace {

struct M3Fixture {
  ZSGroup g = build_zappa(build_m3({3, 9, 1, 1}));
  MatrixGroup group{g, brute_force_aut(g)};
  Families fam = compute_families(group);
};

}  // namespace

TEST_CASE("ABCD at M3(3,9,1,1)") {
  const M3Fixture f;
  CHECK(verify_ABCD(f.group, f.fam).verdict());
}

TEST_CASE("chain at M3(3,9,1,1)") {
  const M3Fixture f;
  CHECK(f.fam.at(FamilyId::C).order() == 9);
  CHECK(f.fam.at(FamilyId::B).order() == 3);
  CHECK(verify_semidirect_chain(f.group, f.fam, "EB").verdict());
  CHECK(verify_semidirect_chain(f.group, f.fam, "CM").verdict());
  CHECK(verify_semidirect_chain(f.group, f.fam, "AD").verdict());
  CHECK(f.group.size() == 243);
}

TEST_CASE("order at M3(3,9,1,lambda)") {
  for (std::uint64_t lambda : {1, 2}) {
    const auto g = build_zappa(build_m3({3, 9, 1, lambda}));
    CHECK(brute_force_aut(g).size() == 243);
  }
  std::ostringstream out, err;
  const int code = cli::run({"verify", "--family", "m3", "--p", "3", "--m", "9", "--r", "1", "--lambda", "1",
                             "--claim", "order"},
                            out, err);
  CHECK(code == 0);
}
