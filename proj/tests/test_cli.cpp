#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "toricreg/cli.hpp"

using namespace toricreg;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("variety subcommand", "[cli]") {
  const auto r = call({"variety", "--variety", "Hirzebruch(2)", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("grading") == json::parse("[[1,-2,1,0],[0,1,0,1]]"));
  CHECK(j.at("c") == json::parse("[1,1]"));
  CHECK(j.at("faces") == 9);

  const auto text = call({"variety", "--variety", "P(2)"});
  CHECK(text.code == 0);
  CHECK(text.out.find("n=3 d=2 r=1") != std::string::npos);
  CHECK(text.out.find("c = (1)") != std::string::npos);

  // a JSON file naming the same fan gives the same variety
  const auto path = temp_file("toricreg_f2.json", call({"variety", "--variety", "Hirzebruch(2)", "--json"}).out);
  const auto again = call({"variety", "--variety", path, "--json"});
  REQUIRE(again.code == 0);
  CHECK(json::parse(again.out).at("grading") == j.at("grading"));
  CHECK(call({"variety", "--variety", "PxP(2,1)"}).code == 0);
}

TEST_CASE("stanley subcommand round-trips through JSON", "[cli]") {
  const auto r = call({"stanley", "--variety", "P(3)", "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const auto i = io::ideal_from_json(j.at("ideal"), 4);
  CHECK(i == MonomialIdeal(4, {Monomial({1, 0, 0, 2}), Monomial({0, 1, 0, 2}), Monomial({0, 0, 1, 2})}));
  const auto pairs = io::pairs_from_json(j.at("pairs"));
  CHECK(verify_stanley(i, pairs, VerifyMode::Filtration));

  const auto replay = call({"stanley", "--variety", "P(4)", "--ideal", "x1^2*x2, x1*x2^2", "--strategy", "replay:1,2", "--json"});
  CHECK(replay.code == 0);
  CHECK(call({"stanley", "--variety", "P(3)", "--ideal", "x1", "--strategy", "nice"}).code == 0);
}

TEST_CASE("hilbert subcommand", "[cli]") {
  auto r = call({"hilbert", "--variety", "P(3)", "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "t^2 + 2*t + 2\n");
  r = call({"hilbert", "--variety", "Hirzebruch(2)", "--ring", "--json"});
  CHECK(json::parse(r.out).at("polynomial") == "t1*t2 + t2^2 + t1 + 2*t2 + 1");
  r = call({"hilbert", "--variety", "P(3)", "--face", "1,2,3"});
  CHECK(r.out == "1/2*t^2 + 3/2*t + 1\n");
  CHECK(call({"hilbert", "--variety", "P(3)"}).code == 2);
}

TEST_CASE("regularity subcommand", "[cli]") {
  auto r = call({"regularity", "--variety", "P(3)", "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("generators") == json::parse("[[2]]"));
  CHECK(j.at("assumed_baselines") == "default-K");

  r = call({"regularity", "--variety", "PxP(2,1)", "--poly", "3*t1 + 1", "--json"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("gotzmann") == 4);
  CHECK(j.at("generators") == json::parse("[[3,3]]"));

  const auto base = temp_file("toricreg_base.json", R"({"baselines": [{"face": [], "generators": [[1]]}]})");
  r = call({"regularity", "--variety", "P(2)", "--ideal", "x1^2, x2, x3", "--assume-baseline", base});
  CHECK(r.code == 0);
  CHECK(r.out.find(base) != std::string::npos);
  CHECK(call({"regularity", "--variety", "P(2)", "--ideal", "x1^2, x2, x3"}).code == 1);
}

TEST_CASE("enumerate subcommand", "[cli]") {
  const auto r = call({"enumerate", "--variety", "P(2)", "--poly", "3t+1", "--json"});
  REQUIRE(r.code == 0);
  const json arr = json::parse(r.out);
  CHECK(arr.size() == 30);
  std::set<MonomialIdeal> ideals;
  for (const auto& e : arr) {
    const auto i = io::ideal_from_json(e.at("ideal"), 3);
    ideals.insert(i);
    CHECK(verify_stanley(i, io::pairs_from_json(e.at("pairs")), VerifyMode::Decomposition));
  }
  CHECK(ideals.size() == 30);
  CHECK(r.err == "count=30 gotzmann=4\n");
  const auto text = call({"enumerate", "--variety", "P(2)", "--poly", "1"});
  CHECK(text.out.find("count=3 gotzmann=1") != std::string::npos);
}

TEST_CASE("gotzmann and lex subcommands", "[cli]") {
  auto r = call({"gotzmann", "--poly", "3t+1", "--vars", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m=4\nq=(1,1,1,0)\n", 0) == 0);
  r = call({"lex", "--poly", "3t+1", "--vars", "3", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const auto i = io::ideal_from_json(j.at("ideal"), 3);
  CHECK(i == MonomialIdeal(3, {Monomial({4, 0, 0}), Monomial({3, 1, 0})}));
  CHECK(verify_stanley(i, io::pairs_from_json(j.at("pairs")), VerifyMode::Filtration));
  CHECK(call({"lex", "--poly", "t+1", "--vars", "2"}).code == 1);
}

TEST_CASE("degset subcommand", "[cli]") {
  const auto r = call({"degset", "--variety", "P(2)", "--poly", "2", "--seed", "5", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("seed") == 5);
  CHECK(j.at("fixpoint") == true);
  CHECK(j.at("supportive") == true);
  CHECK(j.at("k") == json::parse("[1]"));
  const auto text = call({"degset", "--variety", "P(1)", "--poly", "1"});
  CHECK(text.out.find("supportive=yes") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"hilbert", "--variety", "P(x)", "--ring"}).code == 2);
  CHECK(call({"hilbert", "--variety", "P(2)", "--ideal", "x7"}).code == 2);
  CHECK(call({"hilbert", "--variety", "P(2)", "--ideal", "y1"}).code == 2);
  CHECK(call({"stanley", "--variety", "P(2)", "--ideal", "x1", "--strategy", "greedy"}).code == 2);
  CHECK(call({"gotzmann", "--poly", "-t", "--vars", "3"}).code == 1);
  const auto bad = temp_file("toricreg_bad.json", R"({"rays": [[1,0],[0,1],[-1,-2]], "max_cones": [[1,2],[2,3],[3,1]]})");
  const auto r = call({"variety", "--variety", bad});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}
