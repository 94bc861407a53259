#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "supercrystal/cli.hpp"
#include "supercrystal/serialize.hpp"

using namespace supercrystal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary and returns its exit status.
int binary(const std::string& args) {
  const std::string cmd = std::string(SUPERCRYSTAL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("supercrystal_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("lowest-form weight parsing") {
  CHECK(parse_lowest_form("1,0,0,0,1") == Weight(std::vector<int>{1, 0, 0, 0, -1}));
  CHECK(parse_lowest_form("2, 3,1") == Weight(std::vector<int>{2, -3, -1}));
  CHECK_THROWS_AS(parse_lowest_form("1,x,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lowest_form(""), std::invalid_argument);
}

TEST_CASE("graph export of the D(4,1) spin crystal") {
  const Run r = cli({"graph", "--family", "D", "--n", "4", "--crystal", "spin", "--cap", "2"});
  CHECK(r.code == kExitPass);
  CHECK(count(r.out, "[label=\"(") == 24);
  CHECK(count(r.out, "style=dashed") == 8);
  const Run flat = cli({"graph", "--family", "D", "--n", "4", "--crystal", "spin", "--cap", "0"});
  CHECK(count(flat.out, "style=dashed") == 0);
}

TEST_CASE("graph JSON round-trips") {
  const Run r = cli({"graph", "--family", "D", "--n", "3", "--crystal", "spin", "--crystal", "omega0", "--cap", "3",
                     "--format", "json"});
  REQUIRE(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  const SuperGraph g = graph_from_json(j);
  CHECK(g.size() == j["vertices"].size());
  const Json again = graph_to_json(g);
  CHECK(again == j);
  std::set<std::tuple<std::size_t, std::size_t, int>> edges;
  for (const auto& e : g.f_edges()) edges.emplace(e.source, e.target, e.index);
  CHECK(edges.size() == j["edges"].size());
}

TEST_CASE("words parse back from their printed form") {
  const Word w = parse_word("(+-+)_3 x (---)_0");
  REQUIRE(w.size() == 2);
  CHECK(w[0].level == 3);
  CHECK(parse_word(to_string(w)) == w);
  CHECK_THROWS_AS(parse_word("(+-"), std::invalid_argument);
}

TEST_CASE("summary JSON round-trips") {
  const AlgebraType b2(Family::B, 2);
  const auto d = decompose_super({SuperFactor::spin(b2), SuperFactor::spin(b2)}, 5).summary;
  const DecompositionSummary back = summary_from_json(summary_to_json(d));
  CHECK(back.summands == d.summands);
  CHECK(back.multiplicity == d.multiplicity);
  CHECK(back.cap == d.cap);
  CHECK(weight_from_json(weight_to_json(d.summands.front())) == d.summands.front());
  CHECK_THROWS(weight_from_json(Json{{"omega", {1, 2}}}));
}

TEST_CASE("decompose the D(4,1) worked example") {
  const Run r = cli({"decompose", "--family", "D", "--n", "4", "--weight", "1,0,0,0,1", "--weight", "1,0,0,0,0",
                     "--cap", "8"});
  CHECK(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "match");
  CHECK(j["product_formula"]["status"] == "match");
}

TEST_CASE("trivial (x) trivial is a single summand") {
  const Run r = cli({"decompose", "--family", "B", "--n", "2", "--weight", "0,0,0", "--weight", "0,0,0", "--cap", "4"});
  CHECK(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["summary"]["components"].size() == 1);
}

TEST_CASE("expected fixtures") {
  const auto good = temp_file("good.json", R"([{"omega":[1,0,0,0,-1]}])");
  const Run ok = cli({"decompose", "--family", "D", "--n", "4", "--weight", "0,0,0,0,0", "--weight", "1,0,0,0,1",
                      "--cap", "6", "--expected", good.string()});
  CHECK(ok.code == kExitPass);
  const auto bad = temp_file("bad.json", R"([{"omega":[2,0,0,0,-1]}])");
  const Run wrong = cli({"decompose", "--family", "D", "--n", "4", "--weight", "0,0,0,0,0", "--weight", "1,0,0,0,1",
                         "--cap", "6", "--expected", bad.string()});
  CHECK(wrong.code == kExitMismatch);
  CHECK(Json::parse(wrong.out)["expected"]["status"] == "diff");
  CHECK_FALSE(wrong.err.empty());
}

TEST_CASE("verification suites") {
  for (const std::string suite : {"axioms", "koga", "zero_arrows", "omega0", "spin_spin"}) {
    CAPTURE(suite);
    const Run r = cli({"verify", "--suite", suite, "--family", "D", "--n", "4", "--cap", "6"});
    CHECK(r.code == kExitPass);
    CHECK(Json::parse(r.out)["status"] == "pass");
  }
  CHECK(cli({"verify", "--suite", "axioms", "--family", "B", "--n", "3", "--cap", "0"}).code == kExitPass);
  CHECK(cli({"verify", "--suite", "nonsense", "--family", "D", "--n", "4"}).code == kExitUsage);
}

TEST_CASE("relation suite") {
  const Run r = cli({"relations", "--family", "D", "--n", "2", "--cap", "4"});
  CHECK(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["failures"].empty());
  CHECK(cli({"relations", "--family", "B", "--n", "2", "--cap", "4"}).code == kExitPass);
}

TEST_CASE("relation report format") {
  RelationReport r;
  r.failures.push_back({"ef-commutator", Family::D, 3, "(+-+)2", "q - 1"});
  const Json j = relation_report_to_json(r);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["relation"] == "ef-commutator");
  CHECK(j[0]["family"] == "D");
  CHECK(j[0]["N"] == 3);
  CHECK(j[0]["basisLabel"] == "(+-+)2");
  CHECK(j[0]["defect"] == "q - 1");
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"graph", "--family", "C", "--n", "3"}).code == kExitUsage);
  CHECK(cli({"graph", "--family", "D", "--n", "1"}).code == kExitUsage);
  CHECK(cli({"decompose", "--family", "D", "--n", "3", "--weight", "1,0,0,0"}).code == kExitUsage);
  CHECK(cli({"decompose", "--family", "D", "--n", "3", "--weight", "1,0,0", "--weight", "1,0,0,0"}).code == kExitUsage);
  CHECK(cli({"graph", "--family", "D", "--n", "3", "--cap", "-1"}).code == kExitUsage);
}

TEST_CASE("installed binary exit codes") {
  CHECK(binary("verify --suite spin_spin --family D --n 4 --cap 6") == kExitPass);
  CHECK(binary("verify --suite zero_arrows --family D --n 4 --cap 6") == kExitPass);
  CHECK(binary("relations --family B --n 2 --cap 3") == kExitPass);
  const auto bad = temp_file("bad_binary.json", R"({"cap":6,"components":[{"weight":{"omega":[3,0,0,0,0]},"multiplicity":1}]})");
  CHECK(binary("decompose --family D --n 4 --weight 0,0,0,0,0 --weight 1,0,0,0,1 --cap 6 --expected " + bad.string()) ==
        kExitMismatch);
  CHECK(binary("graph --family X --n 4") == kExitUsage);
  CHECK(binary("--help") == kExitPass);
}
