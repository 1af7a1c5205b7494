#include "korbit/records.hpp"

#include <algorithm>
#include <map>

namespace korbit {

std::vector<OrbitRecord> orbit_records(const KGB& kgb, const ParabolicType& P, PhiComputer& phi) {
  auto classes = project_to_P(kgb, P);
  auto closed = closed_classes(kgb, P, classes);
  std::vector<SignedTableau> values;
  std::map<SignedTableau, Int> fiber;
  for (const auto& cls : classes) {
    values.push_back(phi.phi_P(P, cls));
    fiber[values.back()] += 1;
  }
  std::vector<OrbitRecord> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    OrbitRecord r;
    r.id = kgb.id(classes[c].qc);
    r.dimension = classes[c].dim;
    r.phi = values[c].to_string();
    r.is_closed = closed[c];
    r.is_regular = is_P_regular(kgb.pair, P, values[c]);
    r.predicted_fiber = predicted_fiber_size(kgb.pair, P, values[c].underlying());
    r.geometric_fiber = fiber[values[c]];
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.id < b.id;
  });
  return out;
}

}  // namespace korbit
