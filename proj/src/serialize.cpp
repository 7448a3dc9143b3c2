#include "zappa/serialize.hpp"

#include <fstream>

#include "zappa/error.hpp"

namespace zappa {

namespace {

template <class F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, std::string(what) + ": " + e.what());
  }
}

const char* side_name(Side s) { return s == Side::kH ? "H" : "K"; }

}  // namespace

Json group_to_json(const GroupTable& g) {
  Json j;
  j["n"] = g.order();
  j["mul"] = g.table();
  j["labels"] = g.labels();
  return j;
}

GroupTable group_from_json(const Json& j, GroupTable::CheckAssociativity check) {
  return parsing("group", [&] {
    if (!j.is_object()) throw Error(ErrorKind::kParse, "group must be an object");
    if (j.contains("cyclic")) {
      const auto n = j.at("cyclic").get<std::size_t>();
      return cyclic_group(n, j.value("symbol", std::string{}));
    }
    auto mul = j.at("mul").get<std::vector<std::vector<Elem>>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != mul.size()) {
      throw Error(ErrorKind::kParse, "\"n\" does not match the table size");
    }
    auto labels = j.value("labels", std::vector<std::string>{});
    return GroupTable(std::move(mul), std::move(labels), check);
  });
}

Json pair_to_json(const MatchedPair& mp) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["H"] = group_to_json(mp.h());
  j["K"] = group_to_json(mp.k());
  j["sigma"] = mp.sigma_table();
  j["theta"] = mp.theta_table();
  return j;
}

MatchedPair pair_from_json(const Json& j) {
  return parsing("pair", [&] {
    if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
      throw Error(ErrorKind::kParse, "unsupported schema " + j.at("schema").dump());
    }
    return MatchedPair(group_from_json(j.at("H")), group_from_json(j.at("K")),
                       j.at("sigma").get<std::vector<std::vector<Elem>>>(),
                       j.at("theta").get<std::vector<std::vector<Elem>>>());
  });
}

Json zs_group_to_json(const ZSGroup& g) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "zs-group";
  j["order"] = g.group().order();
  j["pair"] = pair_to_json(g.pair());
  j["group"] = group_to_json(g.group());
  return j;
}

ZSGroup zs_group_from_json(const Json& j) {
  return parsing("group file", [&] {
    const Json& pj = j.contains("pair") ? j.at("pair") : j;
    ZSGroup g = build_zappa(pair_from_json(pj));
    if (j.contains("group")) {
      const auto mul = j.at("group").at("mul").get<std::vector<std::vector<Elem>>>();
      if (mul != g.group().table()) {
        throw Error(ErrorKind::kParse, "stored table differs from the product of the stored pair");
      }
    }
    return g;
  });
}

Json report_to_json(const ConditionReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["passed"] = r.all_passed();
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["roles"] = c.roles;
    cj["witnesses"] = c.witnesses;
    conds.push_back(std::move(cj));
  }
  j["conditions"] = std::move(conds);
  return j;
}

Json decomposition_to_json(const DecompositionReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["claim"] = r.claim;
  Json factors = Json::array();
  for (FamilyId f : r.factors) factors.push_back(to_string(f));
  j["factors"] = std::move(factors);
  j["verdict"] = r.verdict();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["roles"] = c.roles;
    cj["witnesses"] = c.witnesses;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json matrix_to_json(const AutMatrix& m) {
  auto entry = [](const MapTable& f) {
    Json e;
    e["from"] = side_name(f.dom);
    e["to"] = side_name(f.cod);
    e["values"] = f.tbl;
    return e;
  };
  Json j;
  j["alpha"] = entry(m.alpha);
  j["beta"] = entry(m.beta);
  j["gamma"] = entry(m.gamma);
  j["delta"] = entry(m.delta);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

}  // namespace zappa
