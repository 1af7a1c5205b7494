#include "korbit/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace korbit {

namespace {

struct StripRemoval {
  Partition rest;
  int height;
};

// All ways to remove a border strip of `len` cells leaving a partition.
std::vector<StripRemoval> border_strips(const Partition& p, int len) {
  std::vector<StripRemoval> out;
  if (len <= 0) return out;
  const int k = static_cast<int>(p.size());
  if (k == 0) return out;
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = p[i] + (k - 1 - i);
  for (int i = 0; i < k; ++i) {
    int target = beta[i] - len;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int j = 0; j < k; ++j) {
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition rest(k);
    for (int j = 0; j < k; ++j) rest[j] = nb[j] - (k - 1 - j);
    out.push_back({normalized(rest), height});
  }
  return out;
}

Int mn_symmetric(const Partition& shape, const Partition& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  Partition rest_cycles(cycles.begin() + 1, cycles.end());
  Int total = 0;
  for (const auto& r : border_strips(shape, cycles[0])) {
    Int term = mn_symmetric(r.rest, rest_cycles);
    total += (r.height % 2 == 0) ? term : -term;
  }
  return total;
}

// Signed cycles as (length, negative?) in a fixed processing order.
using SignedCycles = std::vector<std::pair<int, bool>>;

Int mn_wreath(const Partition& first, const Partition& second, const SignedCycles& cycles,
              std::size_t at) {
  if (at == cycles.size()) return (first.empty() && second.empty()) ? 1 : 0;
  auto [len, negative] = cycles[at];
  Int total = 0;
  for (const auto& r : border_strips(first, len)) {
    Int term = mn_wreath(r.rest, second, cycles, at + 1);
    total += (r.height % 2 == 0) ? term : -term;
  }
  for (const auto& r : border_strips(second, len)) {
    Int term = mn_wreath(first, r.rest, cycles, at + 1);
    if (negative) term = -term;
    total += (r.height % 2 == 0) ? term : -term;
  }
  return total;
}

Int cycle_type_centralizer(const Partition& p, int weight_scale) {
  // prod_l (scale*l)^{m_l} m_l!, where m_l is the multiplicity of l in p.
  Int r = 1;
  int run = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    r *= weight_scale * p[i];
    if (i + 1 < p.size() && p[i + 1] == p[i]) {
      ++run;
      r *= run;
    } else {
      run = 1;
    }
  }
  return r;
}

void check_sizes(const WeylType& w, int total, const char* what) {
  if (total != w.rank) {
    throw std::invalid_argument(std::string(what) + ": size does not match rank");
  }
}

}  // namespace

Int group_order(const WeylType& w) {
  Int r = factorial(w.rank);
  if (w.family == WeylFamily::TypeBC) r <<= w.rank;
  return r;
}

std::vector<WIrrep> irreps(const WeylType& w) {
  std::vector<WIrrep> out;
  if (w.family == WeylFamily::TypeA) {
    for (auto& p : partitions_of(w.rank)) out.push_back({p, {}});
    return out;
  }
  for (int a = w.rank; a >= 0; --a) {
    for (auto& f : partitions_of(a)) {
      for (auto& s : partitions_of(w.rank - a)) out.push_back({f, s});
    }
  }
  return out;
}

std::vector<ConjClass> conjugacy_classes(const WeylType& w) {
  std::vector<ConjClass> out;
  if (w.family == WeylFamily::TypeA) {
    for (auto& p : partitions_of(w.rank)) out.push_back({p, {}});
    return out;
  }
  for (int a = w.rank; a >= 0; --a) {
    for (auto& f : partitions_of(a)) {
      for (auto& s : partitions_of(w.rank - a)) out.push_back({f, s});
    }
  }
  return out;
}

Int class_size(const WeylType& w, const ConjClass& c) {
  if (w.family == WeylFamily::TypeA) {
    check_sizes(w, partition_sum(c.pos), "class");
    return factorial(w.rank) / cycle_type_centralizer(c.pos, 1);
  }
  check_sizes(w, partition_sum(c.pos) + partition_sum(c.neg), "class");
  Int centralizer = cycle_type_centralizer(c.pos, 2) * cycle_type_centralizer(c.neg, 2);
  return group_order(w) / centralizer;
}

int sign_character(const WeylType& w, const ConjClass& c) {
  int s = 1;
  for (int l : c.pos) {
    if (l % 2 == 0) s = -s;
  }
  if (w.family == WeylFamily::TypeBC) {
    for (int l : c.neg) {
      if (l % 2 == 1) s = -s;
    }
  }
  return s;
}

Int character_value(const WeylType& w, const WIrrep& s, const ConjClass& c) {
  if (w.family == WeylFamily::TypeA) {
    check_sizes(w, partition_sum(s.first), "irrep");
    check_sizes(w, partition_sum(c.pos), "class");
    if (!s.second.empty() || !c.neg.empty()) {
      throw std::invalid_argument("symmetric group data carries no signed component");
    }
    return mn_symmetric(s.first, c.pos);
  }
  check_sizes(w, partition_sum(s.first) + partition_sum(s.second), "irrep");
  check_sizes(w, partition_sum(c.pos) + partition_sum(c.neg), "class");
  SignedCycles cycles;
  for (int l : c.pos) cycles.emplace_back(l, false);
  for (int l : c.neg) cycles.emplace_back(l, true);
  return mn_wreath(s.first, s.second, cycles, 0);
}

Int irrep_dimension(const WeylType& w, const WIrrep& s) {
  if (w.family == WeylFamily::TypeA) return standard_tableau_count(s.first);
  int a = partition_sum(s.first);
  return binomial(w.rank, a) * standard_tableau_count(s.first) *
         standard_tableau_count(s.second);
}

void validate_levi(const WeylType& w, const LeviType& l) {
  int total = 0;
  int bc = 0;
  for (const auto& f : l) {
    if (f.size <= 0) throw std::invalid_argument("Levi factor of nonpositive size");
    if (f.hyperoctahedral) ++bc;
    total += f.size;
  }
  if (bc > 1) throw std::invalid_argument("at most one hyperoctahedral Levi factor");
  if (bc > 0 && w.family == WeylFamily::TypeA) {
    throw std::invalid_argument("hyperoctahedral factor inside a symmetric group");
  }
  check_sizes(w, total, "Levi");
}

ConjClass class_fusion(const WeylType& w, const LeviType& l,
                       const std::vector<ConjClass>& factor_classes) {
  validate_levi(w, l);
  if (factor_classes.size() != l.size()) {
    throw std::invalid_argument("one class per Levi factor required");
  }
  ConjClass out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& c = factor_classes[i];
    int size = partition_sum(c.pos) + partition_sum(c.neg);
    if (size != l[i].size) throw std::invalid_argument("factor class size mismatch");
    if (!l[i].hyperoctahedral && !c.neg.empty()) {
      throw std::invalid_argument("negative cycles in a symmetric factor");
    }
    out.pos.insert(out.pos.end(), c.pos.begin(), c.pos.end());
    out.neg.insert(out.neg.end(), c.neg.begin(), c.neg.end());
  }
  out.pos = normalized(out.pos);
  out.neg = normalized(out.neg);
  return out;
}

namespace {

// Iterate over all tuples of factor classes of a Levi.
void for_each_levi_class(const WeylType& w, const LeviType& l,
                         const std::function<void(const std::vector<ConjClass>&)>& fn) {
  std::vector<std::vector<ConjClass>> per_factor;
  for (const auto& f : l) {
    WeylType fw{f.hyperoctahedral ? WeylFamily::TypeBC : WeylFamily::TypeA, f.size};
    per_factor.push_back(conjugacy_classes(fw));
  }
  std::vector<ConjClass> tuple(l.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == l.size()) {
      fn(tuple);
      return;
    }
    for (const auto& c : per_factor[i]) {
      tuple[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

Int sign_multiplicity(const WeylType& w, const LeviType& l, const WIrrep& s) {
  validate_levi(w, l);
  Int levi_order = 1;
  for (const auto& f : l) {
    WeylType fw{f.hyperoctahedral ? WeylFamily::TypeBC : WeylFamily::TypeA, f.size};
    levi_order *= group_order(fw);
  }
  Int total = 0;
  for_each_levi_class(w, l, [&](const std::vector<ConjClass>& tuple) {
    Int size = 1;
    for (std::size_t i = 0; i < l.size(); ++i) {
      WeylType fw{l[i].hyperoctahedral ? WeylFamily::TypeBC : WeylFamily::TypeA, l[i].size};
      size *= class_size(fw, tuple[i]);
    }
    ConjClass fused = class_fusion(w, l, tuple);
    total += size * sign_character(w, fused) * character_value(w, s, fused);
  });
  if (total % levi_order != 0) throw std::logic_error("non-integral sign multiplicity");
  Int mult = total / levi_order;
  if (mult < 0) throw std::logic_error("negative sign multiplicity");
  return mult;
}

std::map<WIrrep, Int> induced_sign_decomposition(const WeylType& w, const LeviType& l) {
  std::map<WIrrep, Int> out;
  for (const auto& s : irreps(w)) {
    Int m = sign_multiplicity(w, l, s);
    if (m != 0) out[s] = m;
  }
  return out;
}

std::string irrep_to_string(const WeylType& w, const WIrrep& s) {
  if (w.family == WeylFamily::TypeA) return partition_to_string(s.first);
  std::ostringstream os;
  os << partition_to_string(s.first) << 'x' << partition_to_string(s.second);
  return os.str();
}

}  // namespace korbit
