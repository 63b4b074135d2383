// Drives the installed command line binary end to end.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QDOM_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.output.append(buf.data(), got);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve") {
  RunResult r = run("solve 5 12 --expect");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "gamma(5x12) = 4"));
  CHECK(contains(r.output, "matches reference value 4"));

  // transposed input is normalized
  RunResult t = run("solve 12 5 --expect");
  CHECK(t.exit_code == 0);
  CHECK(contains(t.output, "gamma(5x12) = 4"));

  // budget exhaustion is exit 2
  RunResult b = run("solve 8 8 --nodes 10");
  CHECK(b.exit_code == 2);
  CHECK(contains(b.output, "incomplete"));
}

TEST_CASE("enumerate writes a verifiable file") {
  const std::string json = "cli_test_55.json";
  const std::string html = "cli_test_55.html";
  RunResult r = run("enumerate 5 5 --out " + json + " --html " + html);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "gamma(5x5) = 3"));
  CHECK(contains(r.output, "classes:"));
  CHECK(contains(r.output, "partition histogram:"));

  RunResult v = run("verify " + json);
  CHECK(v.exit_code == 0);
  CHECK(contains(v.output, "OK"));

  RunResult e = run("export-html " + json + " --out " + html);
  CHECK(e.exit_code == 0);
  std::ifstream h(html);
  std::ostringstream ss;
  ss << h.rdbuf();
  CHECK(contains(ss.str(), "<!DOCTYPE html>"));

  // a perturbed file fails verification
  std::ifstream in(json);
  std::ostringstream js;
  js << in.rdbuf();
  std::string text = js.str();
  size_t pos = text.find("\"gamma\": 3");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "\"gamma\": 2");
  const std::string bad = "cli_test_bad.json";
  std::ofstream(bad) << text;
  RunResult vb = run("verify " + bad);
  CHECK(vb.exit_code != 0);

  std::remove(json.c_str());
  std::remove(html.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("near-dominate") {
  RunResult r = run("near-dominate 3 3 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "cover at most 9/9"));
}

TEST_CASE("bounds") {
  RunResult r = run("bounds 10 17");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "thm2=7"));
  CHECK(contains(r.output, "gamma=8"));

  RunResult c = run("bounds --census");
  CHECK(c.exit_code == 0);
  CHECK(contains(c.output, "thm2 achieved: 41 (28 with m <= 6)"));
  CHECK(contains(c.output, "gap 1: 75"));
  CHECK(contains(c.output, "(12,14) (13,17) (14,16) (15,15)"));
  CHECK(contains(c.output, "conjecture holds on all pairs: yes"));
}

TEST_CASE("construct") {
  RunResult s = run("construct strong --m1 7 --n1 4 --k 1");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.output, "8 queens for 13x16"));

  RunResult z = run("construct zero-cover --preset example1");
  CHECK(z.exit_code == 0);
  CHECK(contains(z.output, "13x19 with 10 queens"));

  RunResult f = run("construct family --n1 7 --m1 9");
  CHECK(f.exit_code == 0);
  CHECK(contains(f.output, "gamma(19x21) <= 11"));

  RunResult bad = run("construct strong --m1 4 --n1 4 --k 0");
  CHECK(bad.exit_code == 4);
  RunResult badf = run("construct family --n1 5 --m1 4");
  CHECK(badf.exit_code == 4);
}

TEST_CASE("expect mismatch is exit 3") {
  // 3x3 is outside the reference table
  RunResult r = run("solve 3 3 --expect");
  CHECK(r.exit_code == 3);
}
