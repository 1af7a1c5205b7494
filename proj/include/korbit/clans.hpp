#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "korbit/linalg.hpp"
#include "korbit/pair.hpp"

namespace korbit {

// Label of a K-orbit on the full flag variety.
//  - ComplexGL: `symbols` is a permutation in one-line notation, 0-based
//    (orbits on pairs of flags <-> relative position).
//  - Upq/SpR/SpPQ: a string over {PLUS, MINUS, pair id >= 0}; each pair id
//    occurs exactly twice, ids numbered 0,1,... in order of first occurrence.
struct Clan {
  static constexpr int PLUS = -1;
  static constexpr int MINUS = -2;
  std::vector<int> symbols;
  auto operator<=>(const Clan&) const = default;
};

std::string clan_to_string(const SymmetricPair& pair, const Clan& c);
bool clan_valid(const SymmetricPair& pair, const Clan& c);
std::vector<Clan> enumerate_clans(const SymmetricPair& pair);

enum class RootType {
  ComplexAscent,
  ComplexDescent,
  NonCompactImaginary,
  CompactImaginary,
  Real,
};

struct RootAction {
  RootType type;
  std::vector<int> neighbors;  // dense ascent targets (orbit indices); <= 2
};

// Directed from the smaller orbit to the larger.  alpha = 1-based simple root
// for solid (weak order) edges, 0 for dashed (closure-only) edges.
struct PosetEdge {
  int from = 0;
  int to = 0;
  int alpha = 0;
  bool dashed = false;
  auto operator<=>(const PosetEdge&) const = default;
};

struct ClosurePoset {
  std::vector<std::string> ids;
  std::vector<int> dims;
  std::vector<PosetEdge> edges;
};

using Flag = std::vector<Vec>;

// K\B with the weak and full closure orders.  Geometric pairs carry validated
// representative flags; ComplexGL is purely combinatorial.
struct KGB {
  SymmetricPair pair;
  std::vector<Clan> clans;  // sorted; index = orbit number
  std::vector<int> dims;
  std::vector<Flag> reps;                   // empty for ComplexGL
  std::vector<std::vector<RootAction>> actions;  // [orbit][alpha-1]
  std::vector<PosetEdge> weak_edges;        // solid, dim +1, sorted
  std::vector<std::vector<bool>> full_leq;  // full closure order, reflexive

  int size() const { return static_cast<int>(clans.size()); }
  int index_of(const Clan& c) const;
  std::string id(int i) const { return clan_to_string(pair, clans[i]); }
  int open_orbit() const;
};

KGB build_kgb(const SymmetricPair& pair);

ClosurePoset weak_poset(const KGB& kgb);
// Transitive reduction of the full order; covers present among weak edges stay
// solid and labeled, the rest are dashed.
ClosurePoset full_poset(const KGB& kgb);

// One fiber of K\B -> K\P.
struct PClass {
  std::vector<int> members;  // orbit indices, sorted
  int qc = 0;                // dense (maximal-dimensional) member
  int dim = 0;               // orbit dimension on the partial flag variety
};

// Connected components of the Levi-simple solid edges; verifies that each
// class has a unique maximal member with no Levi-simple ascent.
std::vector<PClass> project_to_P(const KGB& kgb, const ParabolicType& P);

ClosurePoset weak_poset_P(const KGB& kgb, const ParabolicType& P,
                          const std::vector<PClass>& classes);
ClosurePoset full_poset_P(const KGB& kgb, const ParabolicType& P,
                          const std::vector<PClass>& classes);

// Class indices that are minimal in the full (resp. weak) order on K\P.
std::vector<bool> closed_classes(const KGB& kgb, const ParabolicType& P,
                                 const std::vector<PClass>& classes);
std::vector<bool> weak_minimal_classes(const KGB& kgb, const ParabolicType& P,
                                       const std::vector<PClass>& classes);

// Codimension-one closure relations generated from the weak edges by the
// exchange-completion rule, run to a fixed point; `initial` seeds additional
// already-known relations (the weak edges are always included).
std::set<std::pair<int, int>> saturation_relations(const std::vector<PosetEdge>& weak,
                                                   std::set<std::pair<int, int>> initial = {});

// Simple root in 1..root_rank named by an action/edge label.  ComplexGL uses
// one label block per factor (1..n-1 right action, n..2n-2 left action); for
// the other pairs the label is the root itself.
int simple_root_of_label(const SymmetricPair& pair, int label);

// Permutation helpers (ComplexGL combinatorics and test oracles).
int permutation_length(const std::vector<int>& w);
// Bruhat order via the rank-matrix (equivalently subword) criterion.
bool bruhat_leq(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace korbit
