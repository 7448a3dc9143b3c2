#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "zappa/cli.hpp"
#include "zappa/error.hpp"
#include "zappa/family_l2.hpp"
#include "zappa/family_m3.hpp"
#include "zappa/serialize.hpp"

using namespace zappa;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "zappa_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

const char* kTrivialZ2 = R"({"H": {"cyclic": 2}, "K": {"cyclic": 2},
  "sigma": [[0, 1], [0, 1]], "theta": [[0, 0], [1, 1]]})";

}  // namespace

TEST_CASE("json round trips") {
  const auto mp = build_l2({8, 3, 1});
  const auto j = pair_to_json(mp);
  CHECK(j["schema"] == "1");
  CHECK(pair_from_json(j) == mp);
  CHECK(pair_from_json(Json::parse(j.dump())) == mp);

  const auto g = build_zappa(build_m3({3, 9, 1, 1}));
  const auto gj = zs_group_to_json(g);
  CHECK(gj["order"] == 81);
  CHECK(gj["kind"] == "zs-group");
  CHECK(zs_group_from_json(gj).group() == g.group());

  auto tampered = gj;
  tampered["group"]["mul"][1][1] = 0;
  CHECK_THROWS_AS(zs_group_from_json(tampered), Error);

  auto future = j;
  future["schema"] = "2";
  CHECK_THROWS_AS(pair_from_json(future), Error);
  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"H": 3})")), Error);

  const auto c = group_from_json(Json::parse(R"({"cyclic": 5, "symbol": "a"})"));
  CHECK(c.order() == 5);
  CHECK(c.label(2) == "a^2");
}

TEST_CASE("construct") {
  const auto l2 = run({"construct", "--family", "l2", "--m", "8", "--s", "3", "--t", "1"});
  CHECK(l2.code == 0);
  CHECK(Json::parse(l2.out)["order"] == 32);

  const auto m3 = run({"construct", "--family", "m3", "--p", "3", "--m", "9", "--r", "1", "--lambda", "1"});
  CHECK(m3.code == 0);
  CHECK(Json::parse(m3.out)["order"] == 81);

  const auto pair = scratch("trivial_z2_z2.json");
  write(pair, kTrivialZ2);
  const auto out = scratch("klein.json");
  const auto k = run({"construct", "--pair", pair.string(), "-o", out.string()});
  CHECK(k.code == 0);
  std::ifstream f(out);
  const auto kj = Json::parse(f);
  CHECK(kj["order"] == 4);
  // every element squares to the identity
  const auto mul = kj["group"]["mul"];
  for (int x = 0; x < 4; ++x) CHECK(mul[x][x] == 0);

  const auto bad = run({"construct", "--family", "l2", "--m", "8", "--s", "2", "--t", "1"});
  CHECK(bad.code == 2);
  CHECK(!bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("validate") {
  const auto pair = scratch("trivial_pair.json");
  write(pair, kTrivialZ2);
  CHECK(run({"validate", "--pair", pair.string()}).code == 0);

  const auto broken = scratch("broken_pair.json");
  write(broken, R"({"H": {"cyclic": 2}, "K": {"cyclic": 2},
    "sigma": [[0, 1], [1, 1]], "theta": [[0, 0], [1, 1]]})");
  const auto r = run({"validate", "--pair", broken.string()});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["passed"] == false);

  const auto table = scratch("table.json");
  write(table, R"({"n": 3, "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})");
  CHECK(run({"validate", "--table", table.string()}).code == 0);
  write(table, R"({"n": 2, "mul": [[0, 1], [1, 1]]})");
  CHECK(run({"validate", "--table", table.string()}).code == 1);

  const auto junk = scratch("junk.json");
  write(junk, "{not json");
  CHECK(run({"validate", "--pair", junk.string()}).code == 2);
  CHECK(run({"validate", "--pair", (scratch("missing") / "x.json").string()}).code == 2);
}

TEST_CASE("aut and verify") {
  const auto a = run({"aut", "--family", "l2", "--m", "8", "--s", "7", "--t", "1"});
  CHECK(a.code == 0);
  const auto aj = Json::parse(a.out);
  CHECK(aj["order"] == 64);
  CHECK(aj["group_order"] == 32);
  CHECK(aj["spectrum"]["1"] == 1);

  const auto m = run({"aut", "--family", "l2", "--m", "8", "--s", "3", "--t", "1", "--matrices"});
  CHECK(Json::parse(m.out)["matrices"].size() == 64);

  const auto v = run({"verify", "--family", "l2", "--m", "8", "--s", "3", "--t", "1"});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["passed"] == true);

  const auto scale = run({"--max-order", "16", "aut", "--family", "l2", "--m", "8", "--s", "3", "--t", "1"});
  CHECK(scale.code == 2);
  CHECK(scale.out.empty());

  const auto corrupted = scratch("corrupted.json");
  write(corrupted, R"({"H": {"cyclic": 2}, "K": {"cyclic": 2},
    "sigma": [[0, 1], [1, 1]], "theta": [[0, 0], [1, 1]]})");
  const auto c = run({"verify", "--claim", "abcd", "--pair", corrupted.string()});
  CHECK(c.code == 1);
  const auto cj = Json::parse(c.out);
  CHECK(cj["passed"] == false);
  const auto& conds = cj["claims"][0]["report"]["conditions"];
  CHECK(conds[1]["name"] == "C2");
  CHECK(conds[1]["witnesses"][0] == Json::array({1, 0}));
}

TEST_CASE("search output") {
  const auto two = run({"search", "--family", "l2", "--m-max", "2"});
  CHECK(two.code == 0);
  std::istringstream lines(two.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "schema,m,s,t,tag,theorem-id,predicted-order,brute-force-order,match");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",semidirect,") != std::string::npos);
  }
  CHECK(rows > 0);

  const auto m3 = run({"--threads", "2", "search", "--family", "m3", "--p", "3", "--m-max", "9"});
  CHECK(m3.code == 0);
  CHECK(m3.out.find("1,3,9,1,4,1,genuine,1,243,") != std::string::npos);

  const auto again = run({"search", "--family", "m3", "--p", "3", "--m-max", "9"});
  CHECK(again.out == m3.out);

  const auto js = run({"search", "--family", "l2", "--m-max", "8", "--format", "json", "--no-brute-force"});
  const auto j = Json::parse(js.out);
  CHECK(j["schema"] == "1");
  CHECK(j["rows"].size() > 0);

  CHECK(run({"search", "--family", "m3", "--m-max", "9"}).code == 2);
  CHECK(run({"search", "--family", "q7", "--m-max", "9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}
