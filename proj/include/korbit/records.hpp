#pragma once

#include <string>
#include <vector>

#include "korbit/phi.hpp"
#include "korbit/springer.hpp"

namespace korbit {

struct OrbitRecord {
  std::string id;  // clan string of the dense class member
  int dimension = 0;
  std::string phi;
  bool is_closed = false;
  bool is_regular = false;
  Int predicted_fiber = 0;
  Int geometric_fiber = 0;
};

// One record per class of K\P, sorted by (dimension, id).
std::vector<OrbitRecord> orbit_records(const KGB& kgb, const ParabolicType& P, PhiComputer& phi);

}  // namespace korbit
