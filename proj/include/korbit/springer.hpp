#pragma once

#include <vector>

#include "korbit/nilpotent.hpp"
#include "korbit/weyl.hpp"

namespace korbit {

// Character of the component group A_G(x) of a nilpotent element, recorded as
// a 0/1 sign vector over the canonical generators (one per distinct even part
// of the partition for Sp; A_G is trivial for GL).
struct AGroupCharacter {
  std::vector<int> signs;
  bool trivial() const {
    for (int s : signs) {
      if (s) return false;
    }
    return true;
  }
  auto operator<=>(const AGroupCharacter&) const = default;
};

// One (orbit, equivariant local system) entry of the Springer correspondence.
struct SpringerMember {
  AGroupCharacter character;
  WIrrep irrep;
};

// Distinct even parts of the shape (Sp) / empty (GL): generator labels of A_G.
std::vector<int> component_group_G(Ambient type, const Partition& shape);

// All Weyl irreps attached to the orbit, trivial local system first.  The
// pairing of nontrivial characters with irreps is lexicographic on both sides;
// characters beyond the number of members do not occur in the Springer image.
std::vector<SpringerMember> springer_members(Ambient type, const Partition& shape);

// The member with trivial local system.
WIrrep springer_irrep(Ambient type, const Partition& shape);

// Members whose local system restricts trivially to the image of A_K(x) in
// A_G(x).  For SpR the image is all of A_G (trivial local system only); for
// the other three pairs the restriction is trivial (all members survive).
std::vector<WIrrep> sp_invariants(const SymmetricPair& pair, const Partition& shape);

// Predicted number of K-orbits on the partial flag variety of type P whose
// conormal variety dominates the given orbit: sum over sp_invariants of the
// multiplicity of the irrep in Ind_{W_L}^W(sgn); squared for ComplexGL.
Int predicted_fiber_size(const SymmetricPair& pair, const ParabolicType& P,
                         const Partition& shape);

// Generic fiber count of the ambient moment map T*(G/P) -> closure of the
// Richardson orbit: sum of sign multiplicities over all Springer members of
// the Richardson orbit (degree 1 = birational).
Int moment_degree(const SymmetricPair& pair, const ParabolicType& P);

}  // namespace korbit
