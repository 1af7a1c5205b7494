#pragma once

#include <string>
#include <vector>

#include "korbit/numeric.hpp"

namespace korbit {

// Weakly decreasing list of positive integers (possibly empty).
using Partition = std::vector<int>;

// Sort decreasing and drop zero parts.
Partition normalized(Partition p);

int partition_sum(const Partition& p);

Partition transpose(const Partition& p);

// All partitions of n, in lexicographically decreasing order starting at (n).
std::vector<Partition> partitions_of(int n);

// Dominance order: sum of the first k parts of a never exceeds that of b.
// Only meaningful when |a| == |b|.
bool dominates(const Partition& b, const Partition& a);

// Number of standard Young tableaux of shape p (hook length formula).
Int standard_tableau_count(const Partition& p);

Int factorial(int n);
Int binomial(int n, int k);

std::string partition_to_string(const Partition& p);

}  // namespace korbit
