#pragma once

#include <map>
#include <optional>
#include <vector>

#include "korbit/clans.hpp"
#include "korbit/model.hpp"
#include "korbit/tableau.hpp"

namespace korbit {

struct PhiOptions {
  unsigned long long seed = 20240;
  int trials = 8;
};

// Signed Jordan type of a nilpotent x in s, resolved by matching the exact
// rank profile r(m, delta) = rank(x^m restricted to the delta coordinates)
// against the valid tableaux in `candidates` (unique match required).
// `sign` empty means unsigned (ComplexGL): plain Jordan type from x^m ranks.
SignedTableau signed_jordan_type(const std::vector<int>& sign, const Mat& x,
                                 const std::vector<SignedTableau>& candidates);

// Dense orbit type over a linear space of nilpotents: sample integer
// combinations with widening coefficients and take the closure-maximal type.
// All samples must be comparable below the maximum (rank semicontinuity).
SignedTableau generic_signed_type(const SymmetricPair& pair, const std::vector<int>& sign,
                                  const std::vector<Mat>& space,
                                  const std::vector<SignedTableau>& candidates,
                                  const PhiOptions& opt);

// Moment-map images of orbits of one pair; owns the matrix model and caches.
class PhiComputer {
 public:
  PhiComputer(const KGB& kgb, const PhiOptions& opt);

  // Dense nilpotent K-orbit in the conormal image at the full-flag level.
  const SignedTableau& phi_B(int orbit);

  // Phi of a class of K\P: phi_B of the dense member, cross-checked against
  // the conormal space of the parabolic-level flag.
  SignedTableau phi_P(const ParabolicType& P, const PClass& cls);

  const std::vector<SignedTableau>& all_valid() const { return candidates_; }

 private:
  std::vector<Mat> conormal_at(int orbit, const std::vector<int>& steps);

  const KGB& kgb_;
  PhiOptions opt_;
  std::optional<MatrixModel> model_;
  std::vector<int> sign_;  // empty for ComplexGL
  std::vector<SignedTableau> candidates_;
  std::map<int, SignedTableau> phi_b_cache_;
};

// Valid tableaux supported on the moment-map image of T*(K\P): underlying
// shape dominated by the Richardson partition.
std::vector<SignedTableau> nilpotent_orbits_theta(const SymmetricPair& pair,
                                                  const ParabolicType& P);

// dim of the K-orbit labeled by t (half the ambient complex orbit dimension;
// for ComplexGL the ambient group is doubled so this is the full GL dim).
int orbit_dim_from_tableau(const SymmetricPair& pair, const SignedTableau& t);

bool is_P_regular(const SymmetricPair& pair, const ParabolicType& P, const SignedTableau& phi);

}  // namespace korbit
