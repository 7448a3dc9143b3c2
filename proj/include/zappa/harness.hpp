#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zappa/automorphism.hpp"
#include "zappa/families.hpp"
#include "zappa/family_l2.hpp"
#include "zappa/family_m3.hpp"
#include "zappa/serialize.hpp"

namespace zappa {

/// Runs job(0..n-1) on up to `threads` workers. Jobs write their own slots.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job);

/// T is a bijection onto the independently enumerated matrix set, every
/// matrix passes (A1)-(A7), the identity values and the kernel lemma hold,
/// matrix_to_aut inverts T, and T(f o g) = T(f) T(g) on all pairs.
struct Correspondence {
  ConditionReport report;
  /// Whether T(f o g) = T(g) T(f) holds instead on all pairs.
  bool opposite_orientation_holds = false;
};
Correspondence check_correspondence(const ZSGroup& g, const MatrixGroup& group);

/// The chain named by the theorem's shape (E x| B with E = C x| M, or
/// F x| C with F = B x| M) and the predicted factor orders.
ConditionReport check_l2_structure(const MatrixGroup& group, const Families& fam, const PredictedAut& pred);

/// (C x| (A x D)) x| B with |B| = |A| = p, |D| = phi(m)/(p-1), |C| = m or m/p.
ConditionReport check_m3_structure(const MatrixGroup& group, const Families& fam, const M3Prediction& pred);

enum class Match { kYes, kNo, kSkipped, kNotApplicable };
const char* to_string(Match m);

struct L2Row {
  L2Params params;
  PairTag tag = PairTag::kGenuine;
  PredictedAut prediction;  // default (unclassified) for semidirect rows
  std::optional<std::uint64_t> brute;
  Match match = Match::kNotApplicable;
};

struct M3Row {
  M3Params params;
  PairTag tag = PairTag::kGenuine;
  std::optional<M3Prediction> prediction;
  std::optional<std::uint64_t> brute;
  Match match = Match::kNotApplicable;
};

struct SearchOptions {
  std::size_t max_order = default_max_group_order();
  unsigned threads = 1;
  bool brute_force = true;
};

/// Rows for every even m in [m_min, m_max], in (m, s, t) order. Points above
/// the size cap are reported as skipped.
std::vector<L2Row> search_l2(std::uint64_t m_min, std::uint64_t m_max, const SearchOptions& opts);
/// Rows for every multiple m of p in [m_min, m_max], in (m, r, lambda) order.
std::vector<M3Row> search_m3(std::uint64_t p, std::uint64_t m_min, std::uint64_t m_max, const SearchOptions& opts);

void write_l2_csv(std::ostream& out, const std::vector<L2Row>& rows);
void write_m3_csv(std::ostream& out, const std::vector<M3Row>& rows);
Json l2_rows_to_json(const std::vector<L2Row>& rows);
Json m3_rows_to_json(const std::vector<M3Row>& rows);

}  // namespace zappa
