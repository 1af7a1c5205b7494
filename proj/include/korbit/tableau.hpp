#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "korbit/pair.hpp"

namespace korbit {

// Young diagram whose rows carry alternating +/- fillings determined by the
// leading sign.  Rows are kept normalized: decreasing length, and for equal
// lengths leading + before leading -.  Sign 0 marks an unsigned diagram
// (ComplexGL), in which case all rows are unsigned.
struct SignedTableau {
  std::vector<std::pair<int, int>> rows;  // (length, leading sign in {+1,-1,0})

  void normalize();
  Partition underlying() const;
  // (#plus boxes, #minus boxes) with signs alternating along each row.
  std::pair<int, int> signature() const;
  bool is_unsigned() const;

  // r(m, sign): number of boxes of the given sign having at least m successors
  // in their row; r(m) summed over both signs in the unsigned case (pass 0).
  int rank(int m, int sign) const;

  std::string to_string() const;
  static SignedTableau parse(const std::string& text);

  auto operator<=>(const SignedTableau&) const = default;
};

bool tableau_valid(const SymmetricPair& pair, const SignedTableau& t);

// All valid tableaux for the pair (size = defining dimension), sorted.
std::vector<SignedTableau> all_tableaux(const SymmetricPair& pair);

SignedTableau zero_tableau(const SymmetricPair& pair);

// Closure order: pointwise comparison of rank profiles.
bool tableau_closure_leq(const SymmetricPair& pair, const SignedTableau& a,
                         const SignedTableau& b);

}  // namespace korbit
