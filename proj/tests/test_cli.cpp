#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "jwtl/fixtures.hpp"
#include "jwtl/json_io.hpp"

using namespace jwtl;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + JWTL_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args) {
  Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

QRat qe(const char* s) { return parse_qexpr(s); }

size_t count_of(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("project prints the small projections") {
  Json q0 = run_json("project --type D --n 0");
  REQUIRE(q0["terms"].size() == 2);
  CHECK(q0["terms"][0]["word"] == "");
  CHECK(qrat_from_json(q0["terms"][1]["coef"]) == qe("1/[2]"));
  CHECK(q0["terms"][1]["word"] == "0");

  Json p1 = run_json("project --type A --n 1");
  REQUIRE(p1["terms"].size() == 2);
  CHECK(p1["terms"][1]["word"] == "1");
  CHECK(qrat_from_json(p1["terms"][1]["coef"]) == qe("1/[2]"));
}

TEST_CASE("project json matches the fixtures") {
  Json q3 = run_json("project --n 3");
  CHECK(q3["size"] == 48);
  TLElement x = element_from_json(q3);
  CHECK(x == golden_element('Q', 3));
}

TEST_CASE("project latex lists one term per line") {
  Run r = run("project --type D --n 3 --format latex");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("Q_{3} =\n  1\n", 0) == 0);
  CHECK(count_of(r.out, "\n") == 49);
  CHECK(r.out.find("\\frac{[3]^{3}}{[6][4]} E_{0}E_{1}\n") != std::string::npos);
  Run a = run("project --type A --n 1 --format latex");
  CHECK(a.out == "P_{1} =\n  1\n  + \\frac{1}{[2]} E_{1}\n");
}

TEST_CASE("coef examples") {
  CHECK(qrat_from_json(run_json("coef --word 0,1 --n 3 --engine tiling")["coef"]) == qe("[3]^3/([6][4])"));
  CHECK(qrat_from_json(run_json("coef --word 1,2,3,0 --n 3 --engine even")["coef"]) == qe("[3]^2/([6][4])"));
  Json c = run_json("coef --word 0,1 --n 3 --engine closed");
  CHECK(qrat_from_json(c["coef"]) == qe("[3]^3/([6][4])"));
  CHECK(c["family"] == "e01");
  Json t = run_json("coef --word 1,2,3,0 --n 3 --engine tiling");
  CHECK(t["tilings"] == 2);
  CHECK(t["excluded"] == 2);
  Json h = run_json("coef --word 0,1,3 --n 3 --engine tiling");
  CHECK(h["histories"] == 8);
  CHECK(h["rejected"] == 2);
  CHECK(qrat_from_json(h["coef"]) == qe("[2]^3([2]^2+1)/([6][4])"));
}

TEST_CASE("explained summands add up to the printed total") {
  const char* cases[] = {"--word 0,1 --n 3 --engine product",   "--word 0,1 --n 3 --engine odd",
                         "--word 0,1,3 --n 3 --engine mixed",   "--word 1,2,3,0 --n 3 --engine even",
                         "--word 0,1 --n 3 --engine tiling",    "--word 1,2,3,0 --n 3 --engine tiling",
                         "--word 2,0,1,2 --n 4 --engine product", "--word 3,2,0,1,2,3 --n 4 --engine odd"};
  for (std::string c : cases) {
    INFO(c);
    Json j = run_json("coef --explain " + c);
    REQUIRE(j.contains("summands"));
    QRat s;
    for (const auto& t : j["summands"]) {
      CHECK(!t["label"].get<std::string>().empty());
      s += qrat_from_json(t["coef"]);
    }
    CHECK(s == qrat_from_json(j["coef"]));
  }
}

TEST_CASE("all engines agree through the command line") {
  for (std::string w : {"0,1", "0,1,3", "2,0,1,2", "0,2,3,1,2,0", "1,2,3,0", "3,2,1"}) {
    INFO(w);
    Json p = run_json("coef --n 3 --word " + w);
    QRat want = qrat_from_json(p["coef"]);
    bool odd = p["diagram"]["dots"].size() == 1;
    std::vector<std::string> engines = odd ? std::vector<std::string>{"odd", "mixed", "tiling"} : std::vector<std::string>{"even", "tiling"};
    for (const auto& e : engines)
      CHECK(qrat_from_json(run_json("coef --n 3 --word " + w + " --engine " + e)["coef"]) == want);
  }
}

TEST_CASE("tilings") {
  CHECK(run_json("tilings --lower UDUDUDUD --upper top --emit count")["count"] == 4);
  CHECK(run_json("tilings --lower UDUDUDUD --upper top --emit count --dotted 1,2:5,6 --admissible")["count"] == 2);
  CHECK(run_json("tilings --lower top --upper top --emit count")["count"] == 1);
  CHECK(run_json("tilings --lower top --upper top --size 4 --emit count")["count"] == 1);
  Json all = run_json("tilings --lower UDUDUD");
  REQUIRE(all["tilings"].size() == 2);
  for (const auto& t : all["tilings"]) CHECK_NOTHROW(tiling_from_json(t));
  Run tikz = run("tilings --lower UDUDUDUD --emit tikz --dotted 1,2:5,6");
  REQUIRE(tikz.code == 0);
  CHECK(count_of(tikz.out, "\\begin{tikzpicture}") == 4);
  CHECK(tikz.out.find("\\documentclass") != std::string::npos);
}

TEST_CASE("histories") {
  Json h = run_json("histories --lower UDUUDDUD");
  REQUIRE(h["count"] == 6);
  QRat s;
  for (const auto& x : h["histories"]) s += qrat_from_json(x["weight"]);
  CHECK(s == qrat_from_json(h["total"]));
  CHECK(s == qe("[3]^3/([6][4])"));
  Json z = run_json("histories --lower UDUDUDUD");
  CHECK(z["count"] == 8);
  REQUIRE(z["rejected"].size() == 2);
  for (const auto& r : z["rejected"]) CHECK(r["counts"] == Json::array({0, 1, 0}));
  Run tikz = run("histories --lower UDUUDDUD --emit tikz");
  CHECK(count_of(tikz.out, "\\begin{tikzpicture}") == 6);
}

TEST_CASE("dims") {
  Json d = run_json("dims --rank 4");
  CHECK(d["even"] == 35);
  CHECK(d["odd"] == 13);
  CHECK(d["total"] == 48);
  CHECK(run_json("dims --rank 6")["total"] == 593);
}

TEST_CASE("verify reports each check") {
  Json g = run_json("verify --suite golden");
  CHECK(g["passed"] == true);
  REQUIRE(g["checks"].size() == 1);
  CHECK(!g["checks"][0]["certifies"].get<std::string>().empty());
  Json a = run_json("verify --suite arith --max-rank 3");
  CHECK(a["passed"] == true);
  bool lemma = false;
  for (const auto& c : a["checks"]) lemma = lemma || c["name"] == "summation lemma";
  CHECK(lemma);
}

TEST_CASE("exit codes") {
  CHECK(run("project --n 7").code == 3);
  CHECK(run("project --n 3", "JWTL_MAX_RANK=2").code == 3);
  CHECK(run("coef --word 0 --n 7 --engine even", "JWTL_MAX_RANK=7").code == 0);
  CHECK(run("project --n 1", "JWTL_MAX_RANK=zero").code == 2);
  CHECK(run("project --type X --n 1").code == 2);
  CHECK(run("project --n -1").code == 2);
  CHECK(run("project").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("coef --word 0,1 --n 3 --engine even").code == 4);
  CHECK(run("coef --word 1 --n 3 --engine odd").code == 4);
  CHECK(run("coef --word 1 --n 3 --engine mixed").code == 4);
  CHECK(run("coef --word 2,1 --n 3 --engine closed").code == 0);
  CHECK(run("coef --word 9 --n 3").code == 2);
  CHECK(run("coef --word 0,x --n 3").code == 2);
  CHECK(run("tilings --lower UDD").code == 2);
  CHECK(run("tilings --lower UUDD --upper UDUD").code == 2);
  CHECK(run("tilings --lower UDUD --dotted 3").code == 2);
  CHECK(run("histories --lower UUDD").code == 2);
  CHECK(run("verify --max-rank 7").code == 3);
  CHECK(run("verify --max-rank 1").code == 2);
  CHECK(run("verify --suite nope").code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* args : {"project --n 3", "project --n 3 --format latex", "coef --word 0,1 --n 3 --engine tiling --explain",
                           "histories --lower UDUDUDUD", "tilings --lower UDUDUD --emit tikz", "verify --suite golden"}) {
    INFO(std::string(args));
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
