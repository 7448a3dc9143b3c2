#include "zappa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

#include "zappa/error.hpp"
#include "zappa/number_theory.hpp"

namespace zappa {

using nt::u64;

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          job(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Correspondence check_correspondence(const ZSGroup& g, const MatrixGroup& group) {
  const MatchedPair& mp = g.pair();
  const std::size_t n = group.size();
  ConditionResult onto{"T-onto-enumerated-A", {"enumerated"}};
  ConditionResult acond{"A1-A7", {"matrix"}};
  ConditionResult ident{"identity-values", {"matrix"}};
  ConditionResult kern{"kernel-lemma", {"matrix"}};
  ConditionResult round{"round-trip", {"matrix"}};
  ConditionResult homo{"composition-homomorphy", {"left", "right"}};

  const auto enumerated = enumerate_A_by_generators(mp);
  std::vector<char> seen(n, 0);
  for (std::size_t e = 0; e < enumerated.size(); ++e) {
    const auto idx = group.index_of(enumerated[e]);
    if (!idx || seen[*idx]) {
      record_failure(onto, {static_cast<Elem>(e)}, WitnessMode::kFirst);
      break;
    }
    seen[*idx] = 1;
  }
  if (onto.passed && enumerated.size() != n) onto.passed = false;

  for (std::size_t i = 0; i < n; ++i) {
    const AutMatrix& M = group.matrix(i);
    const Elem w = static_cast<Elem>(i);
    const bool in_a = check_A_conditions(M, mp).all_passed();
    if (!in_a && acond.passed) record_failure(acond, {w}, WitnessMode::kFirst);
    if (!identity_values_hold(M, mp) && ident.passed) record_failure(ident, {w}, WitnessMode::kFirst);
    if (!check_kernel_lemma(M, mp).all_passed() && kern.passed) record_failure(kern, {w}, WitnessMode::kFirst);
    if (in_a && round.passed && !(matrix_to_aut(M, g) == group.automorphism(i))) {
      record_failure(round, {w}, WitnessMode::kFirst);
    }
  }

  std::map<std::vector<Elem>, std::size_t> by_perm;
  for (std::size_t i = 0; i < n; ++i) by_perm.emplace(group.automorphism(i).perm, i);
  bool opposite = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = by_perm.find(compose(group.automorphism(i), group.automorphism(j)).perm);
      const std::size_t want = it == by_perm.end() ? n : it->second;
      const auto got = group.index_of(compose_matrices_unchecked(group.matrix(i), group.matrix(j), mp));
      if (homo.passed && got != want) record_failure(homo, {static_cast<Elem>(i), static_cast<Elem>(j)}, WitnessMode::kFirst);
      if (opposite) {
        const auto flipped = group.index_of(compose_matrices_unchecked(group.matrix(j), group.matrix(i), mp));
        opposite = flipped == want;
      }
    }

  Correspondence out;
  out.report.conditions = {onto, acond, ident, kern, round, homo};
  out.opposite_orientation_holds = opposite;
  return out;
}

namespace {

ConditionResult order_check(const char* name, std::size_t actual, u64 expected) {
  ConditionResult c{name, {"actual"}};
  if (actual != expected) record_failure(c, {static_cast<Elem>(actual)}, WitnessMode::kFirst);
  return c;
}

void append_chain(ConditionReport& r, const MatrixGroup& group, const Families& fam, const char* chain) {
  const auto d = verify_semidirect_chain(group, fam, chain);
  for (auto c : d.checks) {
    c.name = std::string(chain) + ":" + c.name;
    r.conditions.push_back(std::move(c));
  }
}

}  // namespace

ConditionReport check_l2_structure(const MatrixGroup& group, const Families& fam, const PredictedAut& pred) {
  ConditionReport r;
  if (pred.status != PredictionStatus::kClassified) {
    ConditionResult c{"classified", {}};
    c.passed = false;
    r.conditions.push_back(c);
    return r;
  }
  if (pred.shape == ChainShape::kEB) {
    append_chain(r, group, fam, "EB");
    append_chain(r, group, fam, "CM");
  } else {
    append_chain(r, group, fam, "FC");
    append_chain(r, group, fam, "BM");
  }
  r.conditions.push_back(order_check("order-C", fam.at(FamilyId::C).order(), pred.c_part));
  r.conditions.push_back(order_check("order-M", fam.at(FamilyId::M).order(), pred.m_part));
  r.conditions.push_back(order_check("order-B", fam.at(FamilyId::B).order(), pred.b_part));
  return r;
}

ConditionReport check_m3_structure(const MatrixGroup& group, const Families& fam, const M3Prediction& pred) {
  ConditionReport r;
  append_chain(r, group, fam, "EB");
  append_chain(r, group, fam, "CM");
  append_chain(r, group, fam, "AD");
  r.conditions.push_back(order_check("order-B", fam.at(FamilyId::B).order(), pred.b_part));
  r.conditions.push_back(order_check("order-A", fam.at(FamilyId::A).order(), pred.a_part));
  r.conditions.push_back(order_check("order-D", fam.at(FamilyId::D).order(), pred.d_part));
  r.conditions.push_back(order_check("order-C", fam.at(FamilyId::C).order(), pred.c_part));
  return r;
}

const char* to_string(Match m) {
  switch (m) {
    case Match::kYes: return "true";
    case Match::kNo: return "false";
    case Match::kSkipped: return "skipped";
    case Match::kNotApplicable: return "n/a";
  }
  return "n/a";
}

namespace {

std::uint64_t aut_order(const MatchedPair& mp) {
  AutOptions o;
  o.max_order = std::numeric_limits<std::size_t>::max();
  return brute_force_aut(build_zappa(mp), o).size();
}

}  // namespace

std::vector<L2Row> search_l2(u64 m_min, u64 m_max, const SearchOptions& opts) {
  std::vector<L2Row> rows;
  for (u64 m = std::max<u64>(2, m_min + m_min % 2); m <= m_max; m += 2)
    for (const auto& tp : enumerate_l2_params(m)) {
      L2Row row;
      row.params = tp.params;
      row.tag = tp.tag;
      rows.push_back(row);
    }
  parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
    L2Row& row = rows[i];
    if (row.tag == PairTag::kSemidirect) return;
    row.prediction = predicted_aut_l2(row.params);
    if (!opts.brute_force || 4 * row.params.m > opts.max_order) {
      row.match = Match::kSkipped;
      return;
    }
    row.brute = aut_order(build_l2(row.params));
    if (row.prediction.status == PredictionStatus::kClassified) {
      row.match = *row.brute == row.prediction.order ? Match::kYes : Match::kNo;
    }
  });
  return rows;
}

std::vector<M3Row> search_m3(u64 p, u64 m_min, u64 m_max, const SearchOptions& opts) {
  std::vector<M3Row> rows;
  const u64 first = std::max(p, (m_min + p - 1) / p * p);
  for (u64 m = first; m <= m_max; m += p)
    for (const auto& tq : enumerate_m3_params(p, m)) {
      M3Row row;
      row.params = tq.params;
      row.tag = tq.tag;
      rows.push_back(row);
    }
  parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
    M3Row& row = rows[i];
    if (row.tag == PairTag::kSemidirect) return;
    row.prediction = predicted_aut_m3(row.params);
    if (!opts.brute_force || p * p * row.params.m > opts.max_order) {
      row.match = Match::kSkipped;
      return;
    }
    row.brute = aut_order(build_m3(row.params));
    row.match = *row.brute == row.prediction->order ? Match::kYes : Match::kNo;
  });
  return rows;
}

namespace {

std::string opt_str(const std::optional<u64>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

void write_l2_csv(std::ostream& out, const std::vector<L2Row>& rows) {
  out << "schema,m,s,t,tag,theorem-id,predicted-order,brute-force-order,match\n";
  for (const auto& r : rows) {
    const bool genuine = r.tag == PairTag::kGenuine;
    std::string theorem;
    std::optional<u64> predicted;
    if (genuine) {
      theorem = r.prediction.status == PredictionStatus::kClassified ? r.prediction.theorem_id
                                                                     : to_string(r.prediction.status);
      if (r.prediction.status == PredictionStatus::kClassified) predicted = r.prediction.order;
    }
    out << kSchemaVersion << ',' << r.params.m << ',' << r.params.s << ',' << r.params.t << ',' << to_string(r.tag)
        << ',' << theorem << ',' << opt_str(predicted) << ',' << opt_str(r.brute) << ',' << to_string(r.match) << '\n';
  }
}

void write_m3_csv(std::ostream& out, const std::vector<M3Row>& rows) {
  out << "schema,p,m,r,t,lambda,tag,branch,predicted-order,brute-force-order,match\n";
  for (const auto& r : rows) {
    std::string branch;
    std::optional<u64> predicted;
    if (r.prediction) {
      branch = r.prediction->first_branch ? "1" : "2";
      predicted = r.prediction->order;
    }
    out << kSchemaVersion << ',' << r.params.p << ',' << r.params.m << ',' << r.params.r << ',' << r.params.t() << ','
        << r.params.lambda << ',' << to_string(r.tag) << ',' << branch << ',' << opt_str(predicted) << ','
        << opt_str(r.brute) << ',' << to_string(r.match) << '\n';
  }
}

Json l2_rows_to_json(const std::vector<L2Row>& rows) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = "l2";
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["m"] = r.params.m;
    e["s"] = r.params.s;
    e["t"] = r.params.t;
    e["tag"] = to_string(r.tag);
    if (r.tag == PairTag::kGenuine) {
      e["status"] = to_string(r.prediction.status);
      if (r.prediction.status == PredictionStatus::kClassified) {
        e["theorem"] = r.prediction.theorem_id;
        e["predicted"] = r.prediction.order;
        Json also = Json::array();
        for (const auto& [id, order] : r.prediction.also) also.push_back({{"theorem", id}, {"predicted", order}});
        e["also"] = std::move(also);
      }
    }
    if (r.brute) e["brute_force"] = *r.brute;
    e["match"] = to_string(r.match);
    arr.push_back(std::move(e));
  }
  j["rows"] = std::move(arr);
  return j;
}

Json m3_rows_to_json(const std::vector<M3Row>& rows) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = "m3";
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["p"] = r.params.p;
    e["m"] = r.params.m;
    e["r"] = r.params.r;
    e["t"] = r.params.t();
    e["lambda"] = r.params.lambda;
    e["tag"] = to_string(r.tag);
    if (r.prediction) {
      e["branch"] = r.prediction->first_branch ? 1 : 2;
      e["predicted"] = r.prediction->order;
    }
    if (r.brute) e["brute_force"] = *r.brute;
    e["match"] = to_string(r.match);
    arr.push_back(std::move(e));
  }
  j["rows"] = std::move(arr);
  return j;
}

}  // namespace zappa
