#include <vector>

#include "doctest.h"
#include "zappa/error.hpp"
#include "zappa/family_l2.hpp"
#include "zappa/map_algebra.hpp"

using namespace zappa;

namespace {

MatchedPair l2_831() { return build_l2({8, 3, 1}); }

}  // namespace

TEST_CASE("sums and compositions") {
  const auto mp = l2_831();
  const auto z = zero_map(mp, Side::kK, Side::kH);
  CHECK(map_add(mp, z, z) == z);

  const MapTable phi{Side::kK, Side::kH, {0, 3, 2, 1, 0, 3, 2, 1}};
  CHECK(map_compose(identity_map(mp, Side::kH), phi) == phi);
  CHECK(map_compose(phi, identity_map(mp, Side::kK)) == phi);
  CHECK(map_add(mp, phi, map_neg(mp, phi)) == z);

  // pointwise products in Z_4
  const MapTable psi{Side::kK, Side::kH, {0, 1, 1, 1, 2, 2, 3, 3}};
  const auto sum = map_add(mp, phi, psi);
  for (Elem u = 0; u < 8; ++u) CHECK(sum(u) == (phi(u) + psi(u)) % 4);
}

TEST_CASE("action products agree with a pointwise loop") {
  const auto mp = l2_831();
  const MapTable d{Side::kK, Side::kK, {0, 3, 6, 1, 4, 7, 2, 5}};
  const MapTable b{Side::kK, Side::kH, {0, 2, 0, 2, 0, 2, 0, 2}};
  const auto dot = map_dot(mp, d, b);
  const auto exp = map_exp(mp, d, b);
  CHECK(dot.dom == Side::kK);
  CHECK(dot.cod == Side::kH);
  CHECK(exp.cod == Side::kK);
  const auto sigma = mp.sigma_table();
  const auto theta = mp.theta_table();
  for (Elem u = 0; u < 8; ++u) {
    CHECK(dot(u) == sigma[d(u)][b(u)]);
    CHECK(exp(u) == theta[d(u)][b(u)]);
  }
}

TEST_CASE("signature errors") {
  const auto mp = l2_831();
  const auto idh = identity_map(mp, Side::kH);
  const auto idk = identity_map(mp, Side::kK);
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind([&] { map_add(mp, idh, idk); }) == ErrorKind::kMapAlgebraType);
  CHECK(kind([&] { map_compose(idh, idk); }) == ErrorKind::kMapAlgebraType);
  CHECK(kind([&] { map_dot(mp, idh, idk); }) == ErrorKind::kMapAlgebraType);
  CHECK(kind([&] { map_exp(mp, idk, idh); }) == ErrorKind::kMapAlgebraType);
  CHECK(kind([&] { check_signature(mp, MapTable{Side::kH, Side::kK, {0, 1, 9, 0}}); }) ==
        ErrorKind::kMapAlgebraType);
  CHECK(kind([&] { check_signature(mp, MapTable{Side::kH, Side::kH, {0, 1}}); }) ==
        ErrorKind::kMapAlgebraType);
  CHECK_NOTHROW(check_signature(mp, idk));
}

TEST_CASE("kernels and images") {
  const auto mp = l2_831();
  CHECK(kernel_of(mp, identity_map(mp, Side::kH)).members() == std::vector<Elem>{0});
  CHECK(kernel_of(mp, zero_map(mp, Side::kK, Side::kH)).size() == 8);
  const MapTable sq{Side::kK, Side::kK, {0, 2, 4, 6, 0, 2, 4, 6}};
  CHECK(kernel_of(mp, sq).members() == std::vector<Elem>{0, 4});
  CHECK(image_of(mp, sq).members() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(is_homomorphism(mp, sq));
  CHECK_FALSE(is_bijective(sq));
  CHECK_FALSE(is_automorphism(mp, sq));
  const MapTable three{Side::kK, Side::kK, {0, 3, 6, 1, 4, 7, 2, 5}};
  CHECK(is_automorphism(mp, three));
  const MapTable shuffle{Side::kK, Side::kK, {0, 2, 1, 3, 4, 5, 6, 7}};
  CHECK(is_bijective(shuffle));
  CHECK_FALSE(is_homomorphism(mp, shuffle));
}
