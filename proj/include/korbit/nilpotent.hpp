#pragma once

#include <vector>

#include "korbit/pair.hpp"

namespace korbit {

// Nilpotent orbit of the ambient complex group: GL(N) orbits are arbitrary
// partitions of N; Sp(2n) orbits are partitions of 2n in which every odd part
// has even multiplicity.
struct NilpotentOrbitC {
  Ambient type;
  Partition shape;
};

bool valid_orbit_partition(Ambient type, const Partition& shape);

// Complex dimension of the G-orbit.
int orbit_dimension_complex(Ambient type, const Partition& shape);

// Largest symplectic partition dominated by `shape` (type C collapse).
Partition symplectic_collapse(const Partition& shape);

// Dense orbit in the image of the cotangent moment map of the partial flag
// variety: transpose of the Levi coordinate blocks, followed by the collapse
// for Sp ambient.  For ComplexGL this is the per-factor Richardson shape.
Partition richardson_partition(const SymmetricPair& pair, const ParabolicType& P);

// Labels of the simple roots for the orbit's semisimple element, Bourbaki order.
std::vector<int> weighted_dynkin(Ambient type, int rank, const Partition& shape);

bool is_even_orbit(Ambient type, int rank, const Partition& shape);

// Parabolic whose Levi is generated by the 0-labeled simple roots.
// Throws if the orbit is not even.
ParabolicType parabolic_from_even_orbit(Ambient type, int rank, const Partition& shape);

}  // namespace korbit
