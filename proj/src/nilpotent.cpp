#include "korbit/nilpotent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace korbit {

bool valid_orbit_partition(Ambient type, const Partition& shape) {
  Partition p = normalized(shape);
  if (p != shape) return false;
  if (type == Ambient::GL) return true;
  std::map<int, int> mult;
  for (int part : p) ++mult[part];
  for (auto [part, m] : mult) {
    if (part % 2 == 1 && m % 2 == 1) return false;
  }
  return true;
}

int orbit_dimension_complex(Ambient type, const Partition& shape) {
  if (!valid_orbit_partition(type, shape)) throw std::invalid_argument("invalid orbit partition");
  Partition t = transpose(shape);
  int sq = 0;
  for (int c : t) sq += c * c;
  int n_total = partition_sum(shape);
  if (type == Ambient::GL) return n_total * n_total - sq;
  int odd = static_cast<int>(std::count_if(shape.begin(), shape.end(),
                                           [](int x) { return x % 2 == 1; }));
  int n = n_total / 2;
  return (2 * n * n + n) - sq / 2 - odd / 2;
}

Partition symplectic_collapse(const Partition& shape) {
  int n = partition_sum(shape);
  if (n % 2 != 0) throw std::invalid_argument("symplectic partitions have even size");
  if (valid_orbit_partition(Ambient::Sp, shape)) return shape;
  // Largest symplectic partition dominated by `shape`; unique by classical
  // theory, asserted here.
  std::vector<Partition> candidates;
  for (const auto& mu : partitions_of(n)) {
    if (valid_orbit_partition(Ambient::Sp, mu) && dominates(shape, mu)) candidates.push_back(mu);
  }
  Partition best;
  bool have = false;
  for (const auto& mu : candidates) {
    if (!have || dominates(mu, best)) {
      best = mu;
      have = true;
    }
  }
  if (!have) throw std::logic_error("no symplectic partition below shape");
  for (const auto& mu : candidates) {
    if (!dominates(best, mu)) throw std::logic_error("symplectic collapse not unique");
  }
  return best;
}

Partition richardson_partition(const SymmetricPair& pair, const ParabolicType& P) {
  LeviType levi = levi_of(pair, P);
  Partition blocks;
  if (pair.ambient() == Ambient::GL) {
    for (const auto& f : levi) blocks.push_back(f.size);
    return transpose(normalized(blocks));
  }
  // Blocks of the ambient GL(2n) parabolic lying over the symplectic one:
  // each GL factor appears twice, the symplectic factor once with size 2m.
  for (const auto& f : levi) {
    if (f.hyperoctahedral) {
      blocks.push_back(2 * f.size);
    } else {
      blocks.push_back(f.size);
      blocks.push_back(f.size);
    }
  }
  return symplectic_collapse(transpose(normalized(blocks)));
}

std::vector<int> weighted_dynkin(Ambient type, int rank, const Partition& shape) {
  if (!valid_orbit_partition(type, shape)) throw std::invalid_argument("invalid orbit partition");
  int n_total = partition_sum(shape);
  int expected = (type == Ambient::GL) ? rank + 1 : 2 * rank;
  if (n_total != expected) throw std::invalid_argument("orbit size does not match rank");
  std::vector<int> h;
  for (int part : shape) {
    for (int v = part - 1; v >= 1 - part; v -= 2) h.push_back(v);
  }
  std::sort(h.begin(), h.end(), std::greater<int>());
  std::vector<int> labels(rank);
  if (type == Ambient::GL) {
    for (int i = 0; i < rank; ++i) labels[i] = h[i] - h[i + 1];
  } else {
    for (int i = 0; i + 1 < rank; ++i) labels[i] = h[i] - h[i + 1];
    labels[rank - 1] = 2 * h[rank - 1];
  }
  return labels;
}

bool is_even_orbit(Ambient type, int rank, const Partition& shape) {
  for (int l : weighted_dynkin(type, rank, shape)) {
    if (l % 2 != 0) return false;
  }
  return true;
}

ParabolicType parabolic_from_even_orbit(Ambient type, int rank, const Partition& shape) {
  if (!is_even_orbit(type, rank, shape)) throw std::invalid_argument("orbit is not even");
  auto labels = weighted_dynkin(type, rank, shape);
  ParabolicType P;
  for (int i = 0; i < rank; ++i) {
    if (labels[i] == 0) P.levi.insert(i + 1);
  }
  return P;
}

}  // namespace korbit
