#pragma once

#include <cstdint>
#include <vector>

#include "zappa/automorphism.hpp"
#include "zappa/family_l2.hpp"
#include "zappa/matched_pair.hpp"
#include "zappa/report.hpp"

namespace zappa {

/// Z_{p^2} = <b> and Z_m = <a> with a.b = b^t, a^b = a^{pr+1}, a^p.b = b,
/// (a^p)^b = a^{p(pr+1)}, t = 1 + lambda p. Element indices are exponents.
struct M3Params {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::uint64_t lambda = 0;
  std::uint64_t t() const { return (1 + lambda * p) % (p * p); }
  friend bool operator==(const M3Params&, const M3Params&) = default;
};

struct TaggedM3 {
  M3Params params;
  PairTag tag;
};

/// Failing conditions among G1..G3, or "p" when p is not an odd prime
/// dividing m.
std::vector<std::string> m3_failed_conditions(const M3Params& q);

/// r in [0, m), lambda in [1, p). Tags come from the built tables.
/// Throws kFamilyInapplicable unless p is an odd prime dividing m.
std::vector<TaggedM3> enumerate_m3_params(std::uint64_t p, std::uint64_t m);

MatchedPair build_m3(const M3Params& q);
MatchedPair build_m3_closed_form(const M3Params& q);
MatchedPair build_m3_by_closure(const M3Params& q);

/// Whether (pr+1)^{pl} = 1 mod m for l = 1..p-1: all, none, or some.
enum class PowerStratum { kAllTrivial, kNoneTrivial, kMixed };
const char* to_string(PowerStratum s);
PowerStratum m3_power_stratum(const M3Params& q);

struct M3Prediction {
  bool first_branch = true;  // (pr+1)^p = 1 mod m
  std::uint64_t order = 0;
  std::uint64_t b_part = 0;
  std::uint64_t a_part = 0;
  std::uint64_t d_part = 0;
  std::uint64_t c_part = 0;
};

/// Throws kFamilyInapplicable when the tables give a semidirect product.
M3Prediction predicted_aut_m3(const M3Params& q);

/// Power stratum, gamma/alpha facts when no power is trivial, the facts for
/// matrices with beta in Q, and i = s = 1 mod p on E.
ConditionReport check_m3_lemmas(const MatrixGroup& group, const M3Params& q);

}  // namespace zappa
