#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("KORBIT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "KORBIT_BIN must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) {
    if (c == '\n') ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("orbit tables for fixed inputs") {
  auto r = run_cli("orbits --pair spr:2 --parabolic 1");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 7);  // header + 6 classes

  auto full = run_cli("orbits --pair cgl:3");
  CHECK(full.exit_code == 0);
  CHECK(count_lines(full.output) == 7);  // header + 6 orbits
}

TEST_CASE("json output parses and satisfies the record invariant") {
  auto r = run_cli("orbits --pair sppq:1,1 --parabolic 2 --json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.output);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 3);
  for (const auto& rec : parsed) {
    CHECK(rec["predictedFiber"] == rec["geometricFiber"]);
    CHECK(rec.contains("id"));
    CHECK(rec.contains("phi"));
  }
}

TEST_CASE("poset output is dot text and stable across seeds") {
  auto r = run_cli("poset --pair spr:2 --order full");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph") != std::string::npos);
  CHECK(r.output.find("style=dashed") != std::string::npos);
  CHECK(r.output.find(":4\"") != std::string::npos);  // open orbit label id:dim

  auto j = run_cli("poset --pair spr:2 --order full --json");
  auto parsed = nlohmann::json::parse(j.output);
  CHECK(parsed["vertices"].size() == 11);

  auto weak = run_cli("poset --pair cgl:3 --order weak");
  CHECK(weak.exit_code == 0);
  CHECK(weak.output.find("style=dashed") == std::string::npos);

  auto a = run_cli("orbits --pair spr:2 --seed 1");
  auto b = run_cli("orbits --pair spr:2 --seed 99");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("repeated runs are byte identical") {
  auto a = run_cli("orbits --pair upq:2,1 --parabolic 1,2 --json");
  auto b = run_cli("orbits --pair upq:2,1 --parabolic 1,2 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("orbits --pair nosuch:3").exit_code == 2);
  CHECK(run_cli("orbits").exit_code == 2);
  CHECK(run_cli("orbits --pair spr:2 --parabolic 7").exit_code == 2);
  CHECK(run_cli("poset --pair spr:2 --order sideways").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("help is available") {
  auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("orbits") != std::string::npos);
  CHECK(r.output.find("verify") != std::string::npos);
}
