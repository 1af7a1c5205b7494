#include "korbit/springer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace korbit {

std::vector<int> component_group_G(Ambient type, const Partition& shape) {
  std::vector<int> gens;
  if (type == Ambient::GL) return gens;
  for (int part : shape) {
    if (part % 2 == 0 && (gens.empty() || gens.back() != part)) gens.push_back(part);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

namespace {

// Increasing beta-like sequence d_i = lambda_i + (i-1) over the increasingly
// sorted shape, padded with one zero part to even length.
struct DSequence {
  std::vector<int> d;
  std::vector<bool> even_part;
};

DSequence d_sequence(const Partition& shape) {
  std::vector<int> parts(shape.rbegin(), shape.rend());
  if (parts.size() % 2 == 1) parts.insert(parts.begin(), 0);
  DSequence out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.d.push_back(parts[i] + static_cast<int>(i));
    out.even_part.push_back(parts[i] % 2 == 0);
  }
  return out;
}

WIrrep bipartition_from_d(const std::vector<int>& d) {
  std::vector<int> X, Y;
  for (int x : d) {
    if (x % 2 == 0) {
      X.push_back(x / 2);
    } else {
      Y.push_back((x - 1) / 2);
    }
  }
  if (X.size() != Y.size()) throw std::logic_error("unbalanced parity split");
  std::sort(X.begin(), X.end());
  std::sort(Y.begin(), Y.end());
  auto strip_staircase = [](const std::vector<int>& v) {
    Partition p;
    for (std::size_t i = 0; i < v.size(); ++i) p.push_back(v[i] - static_cast<int>(i));
    return normalized(p);
  };
  return {strip_staircase(Y), strip_staircase(X)};
}

}  // namespace

std::vector<SpringerMember> springer_members(Ambient type, const Partition& shape) {
  if (!valid_orbit_partition(type, shape)) throw std::invalid_argument("invalid orbit partition");
  std::vector<SpringerMember> out;
  if (type == Ambient::GL) {
    out.push_back({AGroupCharacter{}, WIrrep{shape, {}}});
    return out;
  }
  auto gens = component_group_G(type, shape);
  AGroupCharacter trivial;
  trivial.signs.assign(gens.size(), 0);
  auto ds = d_sequence(shape);
  out.push_back({trivial, bipartition_from_d(ds.d)});

  // One member per admissible degeneration move on the d-sequence: pick two
  // opposite-parity entries at even-part positions and shift them apart by one,
  // requiring the result to stay a strictly increasing nonnegative sequence.
  std::vector<std::vector<int>> moved;
  for (std::size_t i = 0; i < ds.d.size(); ++i) {
    if (!ds.even_part[i]) continue;
    for (std::size_t j = i + 1; j < ds.d.size(); ++j) {
      if (!ds.even_part[j]) continue;
      if (ds.d[i] % 2 == ds.d[j] % 2) continue;
      if (ds.d[i] == 0) continue;
      std::vector<int> nd = ds.d;
      nd[i] -= 1;
      nd[j] += 1;
      std::sort(nd.begin(), nd.end());
      bool ok = true;
      for (std::size_t k = 0; k + 1 < nd.size(); ++k) {
        if (nd[k] == nd[k + 1]) ok = false;
      }
      if (ok) moved.push_back(nd);
    }
  }
  // Nontrivial characters in lexicographic sign-vector order pair with moves in
  // lexicographic (position) order.
  std::vector<AGroupCharacter> nontrivial;
  int count = 1 << static_cast<int>(gens.size());
  for (int mask = 1; mask < count; ++mask) {
    AGroupCharacter c;
    for (std::size_t g = 0; g < gens.size(); ++g) c.signs.push_back((mask >> g) & 1);
    nontrivial.push_back(c);
  }
  std::sort(nontrivial.begin(), nontrivial.end());
  if (moved.size() > nontrivial.size()) throw std::logic_error("more members than characters");
  for (std::size_t m = 0; m < moved.size(); ++m) {
    out.push_back({nontrivial[m], bipartition_from_d(moved[m])});
  }
  return out;
}

WIrrep springer_irrep(Ambient type, const Partition& shape) {
  return springer_members(type, shape).front().irrep;
}

std::vector<WIrrep> sp_invariants(const SymmetricPair& pair, const Partition& shape) {
  std::vector<WIrrep> out;
  for (const auto& m : springer_members(pair.ambient(), shape)) {
    if (pair.kind == PairKind::SpR && !m.character.trivial()) continue;
    out.push_back(m.irrep);
  }
  return out;
}

Int predicted_fiber_size(const SymmetricPair& pair, const ParabolicType& P,
                         const Partition& shape) {
  WeylType w = pair.weyl();
  LeviType l = levi_of(pair, P);
  Int total = 0;
  for (const auto& s : sp_invariants(pair, shape)) {
    Int m = sign_multiplicity(w, l, s);
    total += (pair.kind == PairKind::ComplexGL) ? m * m : m;
  }
  return total;
}

Int moment_degree(const SymmetricPair& pair, const ParabolicType& P) {
  // Degree of the ambient moment map onto its image: all local systems of the
  // Richardson orbit contribute, independently of the symmetric pair.
  WeylType w = pair.weyl();
  LeviType l = levi_of(pair, P);
  Int total = 0;
  for (const auto& m : springer_members(pair.ambient(), richardson_partition(pair, P))) {
    total += sign_multiplicity(w, l, m.irrep);
  }
  return total;
}

}  // namespace korbit
