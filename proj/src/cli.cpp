#include "zappa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <thread>

#include "zappa/error.hpp"
#include "zappa/harness.hpp"

namespace zappa::cli {

namespace {

using nt_u64 = std::uint64_t;

struct Source {
  std::string family;
  nt_u64 m = 0, s = 0, t = 0, p = 0, r = 0, lambda = 0;
  std::string pair_path;
  std::string group_path;
};

void add_source(CLI::App* cmd, Source& src, bool allow_group) {
  cmd->add_option("--family", src.family, "l2 or m3")->check(CLI::IsMember({"l2", "m3"}));
  cmd->add_option("--m", src.m, "modulus of K = Z_m");
  cmd->add_option("--s", src.s, "L2 parameter s");
  cmd->add_option("--t", src.t, "L2 parameter t");
  cmd->add_option("--p", src.p, "M3 prime");
  cmd->add_option("--r", src.r, "M3 parameter r");
  cmd->add_option("--lambda", src.lambda, "M3 parameter lambda (t = 1 + lambda p)");
  cmd->add_option("--pair", src.pair_path, "matched pair JSON");
  if (allow_group) cmd->add_option("--group", src.group_path, "group JSON written by construct");
}

L2Params l2_of(const Source& s) { return {s.m, s.s, s.t}; }
M3Params m3_of(const Source& s) { return {s.p, s.m, s.r, s.lambda}; }

MatchedPair resolve_pair(const Source& src) {
  if (src.family == "l2") return build_l2(l2_of(src));
  if (src.family == "m3") return build_m3(m3_of(src));
  if (!src.pair_path.empty()) return pair_from_json(read_json_file(src.pair_path));
  if (!src.group_path.empty()) {
    const Json j = read_json_file(src.group_path);
    return pair_from_json(j.contains("pair") ? j.at("pair") : j);
  }
  throw Error(ErrorKind::kParse, "give --family with parameters, --pair or --group");
}

ZSGroup resolve_group(const Source& src) {
  if (src.family.empty() && src.pair_path.empty() && !src.group_path.empty()) {
    return zs_group_from_json(read_json_file(src.group_path));
  }
  return build_zappa(resolve_pair(src));
}

void emit(std::ostream& out, const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::kParse, "cannot write " + path);
  f << j.dump(2) << '\n';
}

void check_scale(const ZSGroup& g, std::size_t cap) {
  if (g.group().order() > cap) {
    throw Error(ErrorKind::kScale, "group order " + std::to_string(g.group().order()) + " exceeds the cap " +
                                       std::to_string(cap) + " (set --max-order or ZAPPA_MAX_GROUP_ORDER)");
  }
}

nt_u64 perm_order(const std::vector<Elem>& perm) {
  std::vector<char> seen(perm.size(), 0);
  nt_u64 order = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    nt_u64 len = 0;
    for (std::size_t x = i; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Json claim_json(const std::string& name, const ConditionReport& r) {
  Json j;
  j["claim"] = name;
  j["passed"] = r.all_passed();
  j["report"] = report_to_json(r);
  return j;
}

Json claim_json(const std::string& name, const DecompositionReport& r) {
  Json j;
  j["claim"] = name;
  j["passed"] = r.verdict();
  j["report"] = decomposition_to_json(r);
  return j;
}

struct VerifyRequest {
  std::vector<std::string> claims;
  bool everything = true;
  std::vector<std::string> chains;
  std::size_t max_order = 0;
  unsigned threads = 1;
};

Json verify_one(const Source& src, const VerifyRequest& req) {
  const MatchedPair mp = resolve_pair(src);
  Json j;
  Json results = Json::array();
  const auto pair_report = validate_matched_pair(mp, WitnessMode::kFirst);
  if (!pair_report.all_passed()) {
    results.push_back(claim_json("matched-pair", pair_report));
    j["claims"] = std::move(results);
    j["passed"] = false;
    return j;
  }
  const ZSGroup g = build_zappa(mp);
  check_scale(g, req.max_order);
  auto wanted = [&](const char* c) {
    return req.everything || std::find(req.claims.begin(), req.claims.end(), c) != req.claims.end();
  };
  const MatrixGroup group(g, brute_force_aut(g, AutOptions{req.max_order, req.threads}));
  j["aut_order"] = group.size();
  const Families fam = compute_families(group);
  const bool abelian = mp.h().is_abelian() && mp.k().is_abelian();
  if (wanted("correspondence")) {
    const auto c = check_correspondence(g, group);
    Json cj = claim_json("correspondence", c.report);
    cj["opposite_orientation_holds"] = c.opposite_orientation_holds;
    results.push_back(std::move(cj));
  }
  if (wanted("families")) {
    ConditionReport r;
    for (const auto& [id, rep] : fam.reports) {
      ConditionResult c{std::string("subgroup-") + std::string(to_string(id)), {}};
      c.passed = rep.is_subgroup;
      r.conditions.push_back(c);
    }
    Json cj = claim_json("families", r);
    Json sizes = Json::object();
    for (const auto& [id, rep] : fam.reports) sizes[std::string(to_string(id))] = rep.order();
    cj["orders"] = std::move(sizes);
    Json cross = Json::array();
    for (const auto& cc : cross_check_families(group, fam)) {
      cross.push_back({{"family", std::string(to_string(cc.map_family))},
                       {"constructed", cc.constructed},
                       {"outside_group", cc.outside_group},
                       {"filters_agree", cc.filters_agree}});
    }
    cj["cross_check"] = std::move(cross);
    results.push_back(std::move(cj));
  }
  if (wanted("abcd") && abelian) results.push_back(claim_json("abcd", verify_ABCD(group, fam)));

  const bool is_l2 = src.family == "l2";
  const bool is_m3 = src.family == "m3";
  std::optional<PredictedAut> l2_pred;
  std::optional<M3Prediction> m3_pred;
  if (is_l2 && l2_tag(l2_of(src)) == PairTag::kGenuine) l2_pred = predicted_aut_l2(l2_of(src));
  if (is_m3 && is_semidirect(mp) == ProductKind::kGenuine) m3_pred = predicted_aut_m3(m3_of(src));

  if (wanted("chain")) {
    if (l2_pred) {
      results.push_back(claim_json("chain", check_l2_structure(group, fam, *l2_pred)));
    } else if (m3_pred) {
      results.push_back(claim_json("chain", check_m3_structure(group, fam, *m3_pred)));
    } else if (abelian) {
      const std::vector<std::string> use = req.chains.empty() ? std::vector<std::string>{"EB", "CM"} : req.chains;
      for (const auto& c : use) results.push_back(claim_json("chain-" + c, verify_semidirect_chain(group, fam, c)));
    }
  }
  if (wanted("order") && (l2_pred || m3_pred)) {
    Json cj;
    cj["claim"] = "order";
    const nt_u64 predicted = l2_pred ? l2_pred->order : m3_pred->order;
    const bool classified = !l2_pred || l2_pred->status == PredictionStatus::kClassified;
    cj["status"] = l2_pred ? to_string(l2_pred->status) : "classified";
    if (l2_pred) cj["theorem"] = l2_pred->theorem_id;
    if (m3_pred) cj["branch"] = m3_pred->first_branch ? 1 : 2;
    cj["predicted"] = predicted;
    cj["brute_force"] = group.size();
    cj["passed"] = classified && predicted == group.size();
    results.push_back(std::move(cj));
  }
  if (wanted("lemmas")) {
    if (is_l2) results.push_back(claim_json("lemmas", check_l2_lemmas(group, l2_of(src))));
    if (is_m3) results.push_back(claim_json("lemmas", check_m3_lemmas(group, m3_of(src))));
  }

  bool passed = true;
  for (const auto& r : results) passed = passed && r["passed"].get<bool>();
  j["claims"] = std::move(results);
  j["passed"] = passed;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zappa-Szep products of cyclic groups and their automorphism groups", "zappa"};
  app.require_subcommand(1);
  std::size_t max_order = default_max_group_order();
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--max-order", max_order, "brute-force cap on |G|")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  Source src;
  std::string output;
  auto* construct = app.add_subcommand("construct", "build a group and write it as JSON");
  add_source(construct, src, false);
  construct->add_option("-o,--output", output, "output file (stdout by default)");

  auto* validate = app.add_subcommand("validate", "check a matched pair or a group table");
  add_source(validate, src, false);
  std::string table_path;
  validate->add_option("--table", table_path, "group table JSON {n, mul, labels}");

  bool with_matrices = false;
  auto* aut = app.add_subcommand("aut", "enumerate Aut(G)");
  add_source(aut, src, true);
  aut->add_flag("--matrices", with_matrices, "include every matrix");

  std::vector<std::string> claims;
  bool all_claims = false;
  std::vector<std::string> chains;
  auto* verify = app.add_subcommand("verify", "check the decomposition and order claims");
  add_source(verify, src, true);
  verify->add_option("--claim", claims, "correspondence, abcd, chain, order, lemmas, families")
      ->check(CLI::IsMember({"correspondence", "abcd", "chain", "order", "lemmas", "families"}));
  verify->add_flag("--all-claims", all_claims, "every claim that applies (default)");
  verify->add_option("--chain", chains, "chains for pair input: EB, CM, BM, FC, AD");

  std::string family;
  nt_u64 m_min = 2, m_max = 0, p = 0;
  std::string format = "csv";
  bool no_brute = false;
  auto* search = app.add_subcommand("search", "sweep a parameter family");
  search->add_option("--family", family, "l2 or m3")->required()->check(CLI::IsMember({"l2", "m3"}));
  search->add_option("--m-min", m_min, "smallest modulus");
  search->add_option("--m-max", m_max, "largest modulus")->required();
  search->add_option("--p", p, "M3 prime");
  search->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  search->add_flag("--no-brute-force", no_brute, "predictions only");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) {
      const ZSGroup g = build_zappa(resolve_pair(src));
      emit(out, zs_group_to_json(g), output);
      return 0;
    }

    if (*validate) {
      if (!table_path.empty()) {
        Json r;
        r["schema"] = kSchemaVersion;
        try {
          const GroupTable g = group_from_json(read_json_file(table_path), GroupTable::CheckAssociativity::kYes);
          r["passed"] = true;
          r["order"] = g.order();
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kInvalidGroup) throw;
          r["passed"] = false;
          r["error"] = e.what();
        }
        emit(out, r, "");
        return r["passed"].get<bool>() ? 0 : 1;
      }
      const auto report = validate_matched_pair(resolve_pair(src), WitnessMode::kAll);
      emit(out, report_to_json(report), "");
      return report.all_passed() ? 0 : 1;
    }

    if (*aut) {
      const ZSGroup g = resolve_group(src);
      check_scale(g, max_order);
      const auto auts = brute_force_aut(g, AutOptions{max_order, threads});
      Json j;
      j["schema"] = kSchemaVersion;
      j["group_order"] = g.group().order();
      j["order"] = auts.size();
      std::map<nt_u64, nt_u64> spectrum;
      for (const auto& a : auts) ++spectrum[perm_order(a.perm)];
      Json spec = Json::object();
      for (const auto& [o, c] : spectrum) spec[std::to_string(o)] = c;
      j["spectrum"] = std::move(spec);
      if (with_matrices) {
        Json ms = Json::array();
        for (const auto& a : auts) ms.push_back(matrix_to_json(aut_to_matrix(a, g)));
        j["matrices"] = std::move(ms);
      }
      emit(out, j, "");
      return 0;
    }

    if (*verify) {
      VerifyRequest req{claims, all_claims || claims.empty(), chains, max_order, threads};
      Json j;
      j["schema"] = kSchemaVersion;
      bool passed = true;
      if (src.family == "l2" && verify->count("--s") == 0 && verify->count("--t") == 0) {
        // every genuine point of this modulus
        Json points = Json::array();
        for (const auto& tp : enumerate_l2_params(src.m)) {
          if (tp.tag != PairTag::kGenuine) continue;
          Source one = src;
          one.s = tp.params.s;
          one.t = tp.params.t;
          Json pj = verify_one(one, req);
          pj["m"] = one.m;
          pj["s"] = one.s;
          pj["t"] = one.t;
          passed = passed && pj["passed"].get<bool>();
          points.push_back(std::move(pj));
        }
        j["points"] = std::move(points);
      } else {
        Json pj = verify_one(src, req);
        passed = pj["passed"].get<bool>();
        for (auto it = pj.begin(); it != pj.end(); ++it) j[it.key()] = it.value();
      }
      j["passed"] = passed;
      emit(out, j, "");
      return passed ? 0 : 1;
    }

    if (*search) {
      SearchOptions opts;
      opts.max_order = max_order;
      opts.threads = threads;
      opts.brute_force = !no_brute;
      if (family == "l2") {
        const auto rows = search_l2(m_min, m_max, opts);
        if (format == "csv") {
          write_l2_csv(out, rows);
        } else {
          emit(out, l2_rows_to_json(rows), "");
        }
      } else {
        if (p == 0) throw Error(ErrorKind::kParse, "--p is required for m3");
        const auto rows = search_m3(p, m_min, m_max, opts);
        if (format == "csv") {
          write_m3_csv(out, rows);
        } else {
          emit(out, m3_rows_to_json(rows), "");
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kMatchedPairInvalid ? 1 : 2;
  }
  return 2;
}

}  // namespace zappa::cli
