// End-to-end tests of the command-line binary: golden outputs, exit codes,
// and byte-for-byte determinism.  The binary path arrives as argv[1].

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

std::string cli_path;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "pf_cli_test_" + std::to_string(++counter);
  std::string out_file = base + ".out";
  std::string err_file = base + ".err";
  std::string cmd = "\"" + cli_path + "\" " + args + " > " + out_file + " 2> " + err_file;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

json parse_out(const RunResult& r) { return json::parse(r.out); }

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("volume: ps:3 with netflow (1,1,1,-3) agrees across five methods") {
  auto r = run_cli("volume --named ps:3 --netflow 1,1,1,-3");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  CHECK(j["volume"] == 16);
  REQUIRE(j["methods"].size() == 5);
  for (const char* m : {"simplices", "count", "lidskii", "lidskii-classic", "hstar1"})
    CHECK(j["methods"][m] == 16);
}

TEST_CASE("volume: unit netflow unlocks the three extra methods") {
  auto r = run_cli("volume --named oru:2");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  CHECK(j["volume"] == 2);
  REQUIRE(j["methods"].size() == 8);
  for (const char* m : {"simplices", "count", "lidskii", "lidskii-classic", "hstar1", "kostant",
                        "indegree", "gstar"})
    CHECK(j["methods"][m] == 2);

  auto single = run_cli("volume --named oru:2 --method kostant");
  REQUIRE(single.exit_code == 0);
  json js = parse_out(single);
  CHECK(js["method"] == "kostant");
  CHECK(js["volume"] == 2);

  auto lidskii = run_cli("volume --named ps:3 --netflow 1,1,1,-3 --method lidskii");
  REQUIRE(lidskii.exit_code == 0);
  CHECK(parse_out(lidskii)["volume"] == 16);
}

TEST_CASE("hstar: bare coefficient arrays") {
  auto r3 = run_cli("hstar --named oru:3");
  REQUIRE(r3.exit_code == 0);
  CHECK(r3.out == "[1,4,1]\n");
  auto r2 = run_cli("hstar --named oru:2");
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out == "[1,1]\n");
}

TEST_CASE("routes: oru:2 lists its four routes bottom-up") {
  auto r = run_cli("routes --named oru:2");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  CHECK(j["count"] == 4);
  json expected = json::array(
      {"x_1 s_0 s_1 y", "x_1 s_0 t_2 y", "x_1 t_1 s_1 y", "x_1 t_1 t_2 y"});
  CHECK(j["routes"][0] == expected);
}

TEST_CASE("enumerate: every family on oru:2") {
  auto groves = run_cli("enumerate --named oru:2 --family groves");
  REQUIRE(groves.exit_code == 0);
  json jg = parse_out(groves);
  CHECK(jg["count"] == 2);
  CHECK(jg["groves"].size() == 2);

  auto permflows = run_cli("enumerate --named oru:2 --family permflows");
  REQUIRE(permflows.exit_code == 0);
  json jp = parse_out(permflows);
  CHECK(jp["count"] == 2);
  for (const auto& p : jp["permflows"]) {
    CHECK(p.contains("words"));
    CHECK(p.contains("summary"));
  }

  auto cliques = run_cli("enumerate --named oru:2 --family cliques");
  REQUIRE(cliques.exit_code == 0);
  CHECK(parse_out(cliques)["count"] == 11);

  auto shuffles = run_cli("enumerate --named oru:2 --family shuffles");
  REQUIRE(shuffles.exit_code == 0);
  CHECK(parse_out(shuffles)["count"] == 2);
}

TEST_CASE("faces: oru:2 complex is graded 4, 5, 2") {
  auto r = run_cli("faces --named oru:2");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  CHECK(j["count"] == 11);
  CHECK(j["rank_sizes"] == json::array({4, 5, 2}));
}

TEST_CASE("weak-order: oru:3 hexagon and its DOT export") {
  auto r = run_cli("weak-order --named oru:3");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  CHECK(j["elements"].size() == 6);
  CHECK(j["covers"].size() == 6);
  CHECK(j["eulerian"] == json::array({1, 4, 1}));
  CHECK(j["descents"].size() == 6);

  auto dot = run_cli("weak-order --named oru:3 --export-dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph weak_order {", 0) == 0);
  CHECK(count_substr(dot.out, " -> ") == 6);
  CHECK(count_substr(dot.out, "[label=") == 12);  // 6 nodes + 6 covers

  auto alias = run_cli("export-dot --named oru:3");
  REQUIRE(alias.exit_code == 0);
  CHECK(alias.out == dot.out);
}

TEST_CASE("lattice-check: oru:3") {
  auto r = run_cli("lattice-check --named oru:3");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  CHECK(j["elements"] == 6);
  CHECK(j["lattice"] == true);
}

TEST_CASE("named: .fg text reloads to the same instance") {
  auto fg = run_cli("named oru:2");
  REQUIRE(fg.exit_code == 0);
  REQUIRE(!fg.out.empty());
  {
    std::ofstream out("pf_cli_test_roundtrip.fg", std::ios::binary);
    out << fg.out;
  }
  auto from_file = run_cli("volume --graph pf_cli_test_roundtrip.fg");
  auto from_name = run_cli("volume --named oru:2");
  REQUIRE(from_file.exit_code == 0);
  CHECK(from_file.out == from_name.out);

  auto fg2 = run_cli("named ps:3 --netflow 1,1,1,-3");
  REQUIRE(fg2.exit_code == 0);
  {
    std::ofstream out("pf_cli_test_roundtrip.fg", std::ios::binary);
    out << fg2.out;
  }
  auto vol = run_cli("volume --graph pf_cli_test_roundtrip.fg");
  REQUIRE(vol.exit_code == 0);
  CHECK(parse_out(vol)["volume"] == 16);
  std::remove("pf_cli_test_roundtrip.fg");
}

TEST_CASE("locate: the square's center sits on the triangulating diagonal") {
  auto r = run_cli("locate --named oru:2 --point 1/2,1/2,1/2,1/2");
  REQUIRE(r.exit_code == 0);
  json j = parse_out(r);
  REQUIRE(j["points"].size() == 1);
  json located = j["points"][0]["located"];
  CHECK(located["clique"]["rank"] == 1);
  CHECK(located["clique"]["matchings"] ==
        json::array({json::array({"x_1 s_0 s_1 y"}), json::array({"x_1 t_1 t_2 y"})}));
  CHECK(located["weights"] == json::array({"1/2", "1/2"}));
}

TEST_CASE("locate: random sampling is seed-deterministic") {
  auto a = run_cli("locate --named oru:3 --random 3 --seed 42");
  auto b = run_cli("locate --named oru:3 --random 3 --seed 42");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_out(a)["points"].size() == 3);
  auto c = run_cli("locate --named oru:3 --random 2 --seed 7");
  REQUIRE(c.exit_code == 0);
  CHECK(parse_out(c)["points"].size() == 2);
}

TEST_CASE("triangulate: identical reruns are byte-identical") {
  auto a = run_cli("triangulate --named ps:3 --netflow 1,1,1,-3");
  auto b = run_cli("triangulate --named ps:3 --netflow 1,1,1,-3");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  json j = parse_out(a);
  CHECK(j["dim"] == 3);
  CHECK(j["count"] == 16);
  CHECK(j["simplices"].size() == 16);
}

TEST_CASE("validate: echoes the augmented instance") {
  auto r = run_cli("validate --named car:4");
  REQUIRE(r.exit_code == 0);
  json g = parse_out(r)["graph"];
  CHECK(g["n"] == 4);
  CHECK(g["m"] == 8);
  CHECK(g["dim"] == 4);
  CHECK(g["netflow"] == json::array({1, 0, 0, 0, -1}));
  CHECK(g["edges"].size() == 8);
}

TEST_CASE("twisted framing keeps the volume") {
  auto r = run_cli("volume --named oru:3 --framing twisted");
  REQUIRE(r.exit_code == 0);
  CHECK(parse_out(r)["volume"] == 6);
}

TEST_CASE("usage, parse, and budget failures exit 2") {
  for (const char* args : {
           "volume",                                            // no instance
           "volume --named oru:2 --graph nosuch.fg",            // both sources
           "volume --graph /nonexistent/really.fg",             // unreadable file
           "volume --named nosuch:3",                           // unknown family name
           "volume --named oru:2 --method bogus",               // unknown method
           "volume --named ps:3 --netflow 1,1,1,-3 --method kostant",  // unit-only method
           "volume --named oru:2 --netflow 1,zap,-1",           // bad netflow entry
           "volume --named oru:2 --framing weird",              // unknown framing
           "enumerate --named oru:2 --family bogus",            // unknown family
           "weak-order --named ps:3 --netflow 1,1,1,-3",        // needs one half-edge
           "locate --named oru:2",                              // neither point nor random
           "locate --named oru:2 --point 1,0,1,0 --random 2",   // both point and random
           "routes --named oru:3 --budget 2",                   // budget exceeded
           "frobnicate --named oru:2",                          // unknown verb
       }) {
    std::string shown(args);
    CAPTURE(shown);
    auto r = run_cli(args);
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
}

int main(int argc, char** argv) {
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    if (i == 1 && argv[i][0] != '-') {
      cli_path = argv[i];
      continue;
    }
    args.push_back(argv[i]);
  }
  if (cli_path.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary> [doctest options]\n");
    return 64;
  }
  doctest::Context ctx(static_cast<int>(args.size()), args.data());
  return ctx.run();
}
