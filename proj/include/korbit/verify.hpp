#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "korbit/records.hpp"

namespace korbit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Orbit structures are sampling-independent; built once per process.
const KGB& cached_kgb(const SymmetricPair& pair);

// Caches the sampling-dependent computations for one (seed, trials) choice.
class Session {
 public:
  explicit Session(const PhiOptions& opt = {});
  const KGB& kgb(const SymmetricPair& pair) { return cached_kgb(pair); }
  PhiComputer& phi(const SymmetricPair& pair);
  const PhiOptions& options() const { return opt_; }

 private:
  PhiOptions opt_;
  std::map<std::string, std::unique_ptr<PhiComputer>> phis_;
};

// Named verification checks grouped by acceptance criterion (1..9); criterion
// 10 (seed stability) builds its own sessions.
std::vector<CheckResult> run_criterion(Session& s, int criterion);
CheckResult seed_stability_check(int trials);

// Everything, for the CLI verification command.
std::vector<CheckResult> verify_all(const PhiOptions& opt);

// Robinson-Schensted insertion shape (test oracle; 0-based one-line input).
Partition rs_shape(const std::vector<int>& w);

std::vector<ParabolicType> all_parabolics(const SymmetricPair& pair);

}  // namespace korbit
