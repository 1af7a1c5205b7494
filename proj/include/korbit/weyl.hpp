#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "korbit/partition.hpp"

namespace korbit {

enum class WeylFamily { TypeA, TypeBC };

// TypeA rank n: the symmetric group S_n.
// TypeBC rank n: the hyperoctahedral group of order 2^n n!.
struct WeylType {
  WeylFamily family;
  int rank;
};

// Irreducible label: a partition of n (TypeA), or a bipartition (first, second)
// of total size n (TypeBC).  Convention for TypeBC: `first` is the side on
// which the coordinate sign flips act trivially, `second` the side twisted by
// the product-of-signs character.  Under this convention the trivial
// representation is ((n), {}), the sign representation ({}, (1^n)), and the
// rank-2 reflection representation ((1), (1)).
struct WIrrep {
  Partition first;
  Partition second;  // empty and unused for TypeA
  auto operator<=>(const WIrrep&) const = default;
};

// Conjugacy class: cycle type (TypeA: `pos` only); for TypeBC `pos` holds the
// positive cycle lengths and `neg` the negative ones.
struct ConjClass {
  Partition pos;
  Partition neg;
  auto operator<=>(const ConjClass&) const = default;
};

// Standard Levi subgroup: consecutive factors, each a symmetric group S_a or
// (at most once, and only in TypeBC) a hyperoctahedral group of rank m.
struct LeviFactor {
  bool hyperoctahedral;
  int size;
};
using LeviType = std::vector<LeviFactor>;

Int group_order(const WeylType& w);
std::vector<WIrrep> irreps(const WeylType& w);
std::vector<ConjClass> conjugacy_classes(const WeylType& w);
Int class_size(const WeylType& w, const ConjClass& c);

// +1/-1: determinant of the reflection representation on the class.
int sign_character(const WeylType& w, const ConjClass& c);

// Murnaghan-Nakayama (TypeA) / wreath-product Murnaghan-Nakayama (TypeBC).
Int character_value(const WeylType& w, const WIrrep& s, const ConjClass& c);

Int irrep_dimension(const WeylType& w, const WIrrep& s);

// The ambient class of an element of the Levi with the given factor classes.
ConjClass class_fusion(const WeylType& w, const LeviType& l,
                       const std::vector<ConjClass>& factor_classes);

// dim Hom_{W_L}(sgn, Res s) = multiplicity of s in Ind_{W_L}^W(sgn).
Int sign_multiplicity(const WeylType& w, const LeviType& l, const WIrrep& s);

// Full decomposition of Ind_{W_L}^W(sgn) as irrep -> multiplicity.
std::map<WIrrep, Int> induced_sign_decomposition(const WeylType& w, const LeviType& l);

std::string irrep_to_string(const WeylType& w, const WIrrep& s);

void validate_levi(const WeylType& w, const LeviType& l);

}  // namespace korbit
