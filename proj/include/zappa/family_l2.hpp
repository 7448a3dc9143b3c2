#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zappa/automorphism.hpp"
#include "zappa/matched_pair.hpp"
#include "zappa/report.hpp"

namespace zappa {

/// Z_4 = <b> and Z_m = <a> with a.b = b^3, a^b = a^{2t+1}, a^2.b = b,
/// (a^2)^b = a^{2s}. Element indices are exponents.
struct L2Params {
  std::uint64_t m = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  friend bool operator==(const L2Params&, const L2Params&) = default;
};

enum class PairTag { kSemidirect, kGenuine };
const char* to_string(PairTag tag);

struct TaggedL2 {
  L2Params params;
  PairTag tag;
};

/// Names of the failing conditions among G1..G4 (empty when valid).
std::vector<std::string> l2_failed_conditions(const L2Params& p);

/// All (s, t) in [0, m)^2 meeting G1..G4, semidirect when 2t = 0 mod m.
/// Odd or zero m throws kFamilyInapplicable.
std::vector<TaggedL2> enumerate_l2_params(std::uint64_t m);

PairTag l2_tag(const L2Params& p);

/// Tables from the closed forms, checked against the completion of the two
/// defining seeds. Throws kFamilyParam for invalid parameters and
/// kFormulaConsistency if the two constructions differ.
MatchedPair build_l2(const L2Params& p);
MatchedPair build_l2_closed_form(const L2Params& p);
MatchedPair build_l2_by_closure(const L2Params& p);

enum class PredictionStatus { kClassified, kUnclassified, kNoGroup };
const char* to_string(PredictionStatus s);

/// Which internal chain the structure theorem goes through.
enum class ChainShape { kEB, kFC };

struct PredictedAut {
  PredictionStatus status = PredictionStatus::kUnclassified;
  std::string theorem_id;
  std::uint64_t order = 0;
  ChainShape shape = ChainShape::kEB;
  std::uint64_t c_part = 0;
  std::uint64_t m_part = 0;
  std::uint64_t b_part = 0;
  /// Other theorems whose hypotheses also match, with their orders.
  std::vector<std::pair<std::string, std::uint64_t>> also;
};

/// Throws kFamilyInapplicable for semidirect-tagged input.
PredictedAut predicted_aut_l2(const L2Params& p);

/// Image constraints on every matrix of the group, the Q facts and the
/// Im(beta) dichotomy.
ConditionReport check_l2_lemmas(const MatrixGroup& group, const L2Params& p);

/// (s, t) points passing G1..G4 with m = 2^n q, n >= 5, q > 1 odd, t even
/// and 1 <= v2(gcd(t, m)) <= n - 4, for even m up to m_max.
struct L2StratumHit {
  L2Params params;
  unsigned i;
  unsigned n;
};
std::vector<L2StratumHit> l2_no_group_sweep(std::uint64_t m_max, std::uint64_t* strata_checked = nullptr);

}  // namespace zappa
