#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tlcb/render.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

const fs::path& report_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("tlcb-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    ::setenv("TLCB_REPORT_DIR", d.c_str(), 1);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  report_dir();
  const std::string cmd = std::string(TLCB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json report(const std::string& name) { return Json::parse(slurp(report_dir() / name)); }

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST_CASE("enumerate") {
  const Run r = run("enumerate --family A --rank 3");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["count"] == catalan(4));
  CHECK(j["elements"][0]["word"] == "");
  CHECK(report("enumerate-A3.json")["status"] == "pass");

  const Run csv = run("enumerate --family B --rank 2 --format csv");
  CHECK(csv.out.rfind("word,length,content,left_descents,right_descents\n", 0) == 0);
  CHECK(csv.out.find("\"1,2,1\",3,1 2,1,1\n") != std::string::npos);
}

TEST_CASE("canonical basis dump of B2") {
  const Run r = run("basis --family B --rank 2 --basis canonical");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["graph"] == "B2");
  CHECK(j["basis"] == "canonical");
  REQUIRE(j["entries"].size() == 7);
  std::map<std::string, std::map<std::string, std::string>> got;
  for (const auto& e : j["entries"])
    for (const auto& c : e["coords"]) got[e["index_word"]][c["word"]] = c["poly"];
  const std::map<std::string, std::map<std::string, std::string>> expect = {
      {"", {{"", "1"}}},           {"1", {{"1", "1"}}},
      {"2", {{"2", "1"}}},         {"1,2", {{"1,2", "1"}}},
      {"2,1", {{"2,1", "1"}}},     {"1,2,1", {{"1,2,1", "1"}, {"1", "-1"}}},
      {"2,1,2", {{"2,1,2", "1"}, {"2", "-1"}}}};
  CHECK(got == expect);

  const Run d = run("basis --family B --rank 2 --basis diagram");
  CHECK(d.code == 0);
  const Json dj = Json::parse(d.out);
  REQUIRE(dj["entries"].size() == 7);
  for (const auto& e : dj["entries"]) CHECK(e.contains("diagram"));

  const Run s = run("basis --family H --rank 2 --basis canonical --structure --format csv");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("x,y,z,poly\n", 0) == 0);
  CHECK(s.out.find(",1,1,v + v^-1\n") != std::string::npos);
}

TEST_CASE("verify suites") {
  Run r = run("verify --family H --rank 3 --suite f-basis-h");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["passed"] == true);
  CHECK(j["suites"][0]["details"]["identities"].size() == 44);

  r = run("verify --family B --rank 3 --format text");
  CHECK(r.code == 0);
  for (const char* s : {"diagram-basis-b", "f-basis-b", "positivity-b", "deletion", "confluence"})
    CHECK(r.out.find(std::string(s) + " B3 PASS") != std::string::npos);

  r = run("verify --family H --rank 3 --suite t-tilde-identities --suite diagram-basis-h");
  CHECK(r.code == 0);
  j = report("verify-H3.json");
  CHECK(j["status"] == "pass");
  CHECK(j["config"]["suites"].size() == 2);
}

TEST_CASE("reports are deterministic") {
  run("verify --family H --rank 3 --suite positivity-h --suite confluence --words 500");
  const std::string first = slurp(report_dir() / "verify-H3.json");
  run("verify --family H --rank 3 --suite positivity-h --suite confluence --words 500");
  CHECK(slurp(report_dir() / "verify-H3.json") == first);
  const fs::path out = report_dir() / "custom" / "b.json";
  CHECK(run("basis --family B --rank 3 --basis f --out " + out.string()).code == 0);
  const std::string b1 = slurp(out);
  run("basis --family B --rank 3 --basis f --out " + out.string());
  CHECK(slurp(out) == b1);
  CHECK(Json::parse(b1)["result"]["entries"].size() == 24);
}

TEST_CASE("calibrate") {
  Run r = run("calibrate --family H");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["rules"]["alpha"] == "1");
  CHECK(j["rules"]["beta"] == "1");
  CHECK(j["rules"]["circle_loop"] == "0");
  r = run("calibrate --family B");
  j = Json::parse(r.out);
  CHECK(j["rules"]["sigma"] == "2");
  CHECK(j["rules"]["tau"] == "-1");
  CHECK(j["rules"]["circle_loop"] == "1/2*v + 1/2*v^-1");
  for (const auto& c : j["checks"]) CHECK(c["holds"] == true);
}

TEST_CASE("render") {
  const std::string t = "n=3; N1-N2[c]; S1-S2[c]; N3-S3";
  Run r = run("render --tangle \"" + t + "\" --format svg");
  CHECK(r.code == 0);
  CHECK(r.out == tlcb::render_svg(tlcb::Tangle::parse(t)));
  r = run("render --tangle \"" + t + "\" --format text");
  CHECK(r.out.find(tlcb::render_ascii(tlcb::Tangle::parse(t))) != std::string::npos);
  r = run("render --family H --rank 3 --word 1,2,1 --format svg");
  CHECK(r.code == 4);  // two terms
  r = run("render --family B --rank 2 --word 1 --format json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["terms"][0]["coeff"] == "2");
}

TEST_CASE("gram-check") {
  Run r = run("gram-check --family B --rank 2");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["report"]["symmetric"] == true);
  CHECK(j["report"]["unitriangular_mod_vinv"] == true);
  CHECK(j["report"]["nondegenerate"] == true);
  CHECK(j["anti_associative_solve"]["unknowns"] == 28);
  CHECK(j["anti_associative_solve"]["nonzero_solution_exists"] == true);

  const fs::path m = report_dir() / "zero-row.json";
  std::ofstream(m) << R"({"graph": "A1", "matrix": [["1", "0"], ["0", "0"]]})";
  r = run("gram-check --family A --rank 2 --matrix " + m.string());
  CHECK(r.code == 4);  // A1 candidate for an A2 algebra
  std::ofstream(m) << R"({"graph": "A2", "matrix": [["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","0"]]})";
  r = run("gram-check --family A --rank 2 --matrix " + m.string());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["report"]["nondegenerate"] == false);
}

TEST_CASE("configuration errors and caps") {
  CHECK(run("verify --family A --rank 1").code == 4);
  CHECK(run("verify --family X").code == 4);
  CHECK(run("frobnicate").code == 4);
  CHECK(run("verify --family H --suite f-basis-b").code == 4);
  CHECK(run("verify --suite no-such-suite").code == 4);
  CHECK(run("enumerate --format svg").code == 4);
  CHECK(run("render --tangle \"n=2; N1-S2; N2-S1\"").code == 4);
  CHECK(run("render").code == 4);
  CHECK(run("verify --family H --rank 4 --suite diagram-basis-h --cap-closure 5").code == 3);
  CHECK(report("verify-H4.json")["status"] == "resource_cap");
  CHECK(run("enumerate --family H --rank 4 --cap-class-size 3").code == 3);
}
