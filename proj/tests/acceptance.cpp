// Acceptance battery: one line per criterion, exit 0 iff all pass.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "korbit/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass;
  std::string text;
};

Line run(korbit::Session& session, int criterion, const std::string& label, double budget) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string fail;
  try {
    for (const auto& r : korbit::run_criterion(session, criterion)) {
      if (!r.pass) {
        pass = false;
        if (fail.empty()) fail = r.name + (r.detail.empty() ? "" : ": " + r.detail);
      }
    }
  } catch (const std::exception& e) {
    pass = false;
    fail = std::string("exception: ") + e.what();
  }
  double dt = seconds_since(t0);
  if (budget > 0 && dt > budget) {
    pass = false;
    fail = "exceeded time budget";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), " (%.2fs)", dt);
  std::string text = std::string(pass ? "PASS" : "FAIL") + " criterion " +
                     std::to_string(criterion) + ": " + label + buf;
  if (!pass) text += " [" + fail + "]";
  return {pass, text};
}

}  // namespace

int main() {
  korbit::Session session;
  std::vector<Line> lines;
  lines.push_back(run(session, 1, "sp(4,R) full flag orbits, closure diagram, moment table", 1.0));
  lines.push_back(run(session, 2, "sp(4,R) maximal parabolic projections", 0));
  lines.push_back(run(session, 3, "fiber formula vs geometry across the pair battery", 120.0));
  lines.push_back(run(session, 4, "sp(1,1) orbits and subregular local systems", 0));
  lines.push_back(run(session, 5, "sp(2n,R) even-orbit parabolic regular classes", 0));
  lines.push_back(run(session, 6, "u(n,n) middle-node parabolic bijection", 0));
  lines.push_back(run(session, 7, "insertion-shape oracle for pairs of flags", 60.0));
  lines.push_back(run(session, 8, "moment map degrees", 0));
  lines.push_back(run(session, 9, "property suites", 0));

  {
    auto t0 = Clock::now();
    bool pass = true;
    std::string fail;
    try {
      auto r = korbit::seed_stability_check(session.options().trials);
      pass = r.pass;
      fail = r.detail;
    } catch (const std::exception& e) {
      pass = false;
      fail = std::string("exception: ") + e.what();
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", seconds_since(t0));
    std::string text = std::string(pass ? "PASS" : "FAIL") +
                       " criterion 10: identical results under three seeds" + buf;
    if (!pass) text += " [" + fail + "]";
    lines.push_back({pass, text});
  }

  bool all = true;
  for (const auto& l : lines) {
    all = all && l.pass;
    std::cout << l.text << "\n";
  }
  std::cout << (all ? "ACCEPTANCE: all criteria pass\n" : "ACCEPTANCE: FAILURES above\n");
  return all ? 0 : 1;
}
