#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "korbit/weyl.hpp"

using namespace korbit;

namespace {

// ---- brute-force signed permutation groups ---------------------------------

struct Element {
  std::vector<int> perm;   // 0-based images
  std::vector<int> sign;   // +1/-1 per position
};

std::vector<Element> symmetric_group(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Element> out;
  do {
    out.push_back({p, std::vector<int>(n, 1)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Element> hyperoctahedral_group(int n) {
  std::vector<Element> out;
  for (const auto& base : symmetric_group(n)) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Element e = base;
      for (int i = 0; i < n; ++i) {
        if (mask & (1 << i)) e.sign[i] = -1;
      }
      out.push_back(e);
    }
  }
  return out;
}

// Signed cycle type: cycle lengths split by the product of signs on the cycle.
ConjClass cycle_type(const Element& e) {
  int n = static_cast<int>(e.perm.size());
  std::vector<bool> seen(n, false);
  ConjClass c;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, s = 1, j = i;
    while (!seen[j]) {
      seen[j] = true;
      s *= e.sign[j];
      ++len;
      j = e.perm[j];
    }
    (s > 0 ? c.pos : c.neg).push_back(len);
  }
  c.pos = normalized(c.pos);
  c.neg = normalized(c.neg);
  return c;
}

int determinant_sign(const Element& e) {
  int n = static_cast<int>(e.perm.size());
  int inv = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (e.perm[i] > e.perm[j]) ++inv;
    }
  }
  int s = (inv % 2) ? -1 : 1;
  for (int v : e.sign) s *= v;
  return s;
}

// All elements of the standard Levi inside the ambient group (blocks act on
// consecutive coordinates, signs only inside hyperoctahedral blocks).
std::vector<Element> levi_elements(int n, const LeviType& l) {
  std::vector<Element> acc = {{std::vector<int>(n), std::vector<int>(n, 1)}};
  std::iota(acc[0].perm.begin(), acc[0].perm.end(), 0);
  int offset = 0;
  for (const auto& f : l) {
    auto factor = f.hyperoctahedral ? hyperoctahedral_group(f.size) : symmetric_group(f.size);
    std::vector<Element> next;
    for (const auto& a : acc) {
      for (const auto& g : factor) {
        Element e = a;
        for (int i = 0; i < f.size; ++i) {
          e.perm[offset + i] = offset + g.perm[i];
          e.sign[offset + i] = g.sign[i];
        }
        next.push_back(e);
      }
    }
    acc = std::move(next);
    offset += f.size;
  }
  return acc;
}

// Type A irreducible characters via the Jacobi-Trudi alternation over
// permutation-module characters (independent of the library implementation).
Int perm_module_character(const std::vector<int>& mu, const Partition& cycles) {
  // number of ways to distribute the cycles into blocks of sizes mu
  std::map<std::vector<int>, Int> state;
  std::vector<int> start = mu;
  state[start] = 1;
  for (int c : cycles) {
    std::map<std::vector<int>, Int> next;
    for (const auto& [rem, ways] : state) {
      for (std::size_t b = 0; b < rem.size(); ++b) {
        if (rem[b] >= c) {
          auto r2 = rem;
          r2[b] -= c;
          next[r2] += ways;
        }
      }
    }
    state = std::move(next);
  }
  Int total = 0;
  for (const auto& [rem, ways] : state) total += ways;
  return total;
}

Int type_a_character_oracle(const Partition& lambda, const Partition& cycles) {
  int k = static_cast<int>(lambda.size());
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    std::vector<int> mu(k);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      mu[i] = lambda[i] - i + p[i];
      if (mu[i] < 0) ok = false;
    }
    if (ok) {
      int inv = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (p[i] > p[j]) ++inv;
        }
      }
      Int term = perm_module_character(mu, cycles);
      total += (inv % 2) ? -term : term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::vector<WeylType> desk_types() {
  return {{WeylFamily::TypeA, 2},  {WeylFamily::TypeA, 3},  {WeylFamily::TypeA, 4},
          {WeylFamily::TypeBC, 1}, {WeylFamily::TypeBC, 2}, {WeylFamily::TypeBC, 3}};
}

std::vector<LeviType> levis_of(const WeylType& w) {
  // all compositions of the rank; for TypeBC optionally a trailing
  // hyperoctahedral block
  std::vector<LeviType> out;
  int n = w.rank;
  std::vector<std::vector<std::vector<int>>> comps(n + 1);
  comps[0] = {{}};
  for (int m = 1; m <= n; ++m) {
    for (int first = 1; first <= m; ++first) {
      for (auto rest : comps[m - first]) {
        rest.insert(rest.begin(), first);
        comps[m].push_back(rest);
      }
    }
  }
  for (int tail = 0; tail <= (w.family == WeylFamily::TypeBC ? n : 0); ++tail) {
    for (const auto& comp : comps[n - tail]) {
      LeviType l;
      for (int a : comp) l.push_back({false, a});
      if (tail > 0) l.push_back({true, tail});
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("table shapes and counting identities") {
  for (const auto& w : desk_types()) {
    auto irr = irreps(w);
    auto cls = conjugacy_classes(w);
    CHECK(irr.size() == cls.size());
    Int order = group_order(w);
    Int sizes = 0, dims2 = 0;
    for (const auto& c : cls) sizes += class_size(w, c);
    for (const auto& s : irr) dims2 += irrep_dimension(w, s) * irrep_dimension(w, s);
    CHECK(sizes == order);
    CHECK(dims2 == order);
  }
}

TEST_CASE("row and column orthogonality") {
  for (const auto& w : desk_types()) {
    auto irr = irreps(w);
    auto cls = conjugacy_classes(w);
    Int order = group_order(w);
    for (std::size_t a = 0; a < irr.size(); ++a) {
      for (std::size_t b = a; b < irr.size(); ++b) {
        Int dot = 0;
        for (const auto& c : cls) {
          dot += class_size(w, c) * character_value(w, irr[a], c) * character_value(w, irr[b], c);
        }
        CHECK(dot == (a == b ? order : Int(0)));
      }
    }
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a; b < cls.size(); ++b) {
        Int dot = 0;
        for (const auto& s : irr) {
          dot += character_value(w, s, cls[a]) * character_value(w, s, cls[b]);
        }
        Int expect = (a == b) ? order / class_size(w, cls[a]) : Int(0);
        CHECK(dot == expect);
      }
    }
  }
}

TEST_CASE("type A characters against the alternation oracle") {
  for (int n = 2; n <= 5; ++n) {
    WeylType w{WeylFamily::TypeA, n};
    for (const auto& s : irreps(w)) {
      for (const auto& c : conjugacy_classes(w)) {
        CHECK(character_value(w, s, c) == type_a_character_oracle(s.first, c.pos));
      }
    }
  }
}

TEST_CASE("identity column and sign row") {
  for (const auto& w : desk_types()) {
    ConjClass id{Partition(w.rank, 1), {}};
    WIrrep sgn = (w.family == WeylFamily::TypeA) ? WIrrep{Partition(w.rank, 1), {}}
                                                 : WIrrep{{}, Partition(w.rank, 1)};
    for (const auto& s : irreps(w)) {
      CHECK(character_value(w, s, id) == irrep_dimension(w, s));
    }
    for (const auto& c : conjugacy_classes(w)) {
      CHECK(character_value(w, sgn, c) == Int(sign_character(w, c)));
    }
  }
}

TEST_CASE("class fusion and sign multiplicities against element enumeration") {
  for (const auto& w : desk_types()) {
    if (w.family == WeylFamily::TypeA || w.rank > 3) continue;
    int n = w.rank;
    for (const auto& l : levis_of(w)) {
      auto elems = levi_elements(n, l);
      Int lorder = elems.size();
      for (const auto& s : irreps(w)) {
        Int sum = 0;
        for (const auto& e : elems) {
          sum += Int(determinant_sign(e)) * character_value(w, s, cycle_type(e));
        }
        CHECK(sum % lorder == 0);
        CHECK(sum / lorder == sign_multiplicity(w, l, s));
      }
      // decomposition consistency and the index identity
      Int total = 0;
      for (const auto& [irr, mult] : induced_sign_decomposition(w, l)) {
        CHECK(mult == sign_multiplicity(w, l, irr));
        CHECK(mult > 0);
        total += mult * irrep_dimension(w, irr);
      }
      CHECK(total * lorder == group_order(w));
    }
  }
}

TEST_CASE("class fusion matches direct cycle computation") {
  WeylType w{WeylFamily::TypeBC, 3};
  std::vector<LeviType> ls = {{{false, 2}, {true, 1}}, {{false, 1}, {true, 2}}, {{false, 3}}};
  for (const auto& l : ls) {
    // fuse each pure factor-class representative
    std::vector<std::vector<ConjClass>> factor_classes = {{}};
    for (const auto& f : l) {
      WeylType fw{f.hyperoctahedral ? WeylFamily::TypeBC : WeylFamily::TypeA, f.size};
      std::vector<std::vector<ConjClass>> next;
      for (const auto& prefix : factor_classes) {
        for (const auto& c : conjugacy_classes(fw)) {
          auto ext = prefix;
          ext.push_back(c);
          next.push_back(ext);
        }
      }
      factor_classes = std::move(next);
    }
    for (const auto& fc : factor_classes) {
      ConjClass fused = class_fusion(w, l, fc);
      ConjClass expect;
      for (const auto& c : fc) {
        for (int x : c.pos) expect.pos.push_back(x);
        for (int x : c.neg) expect.neg.push_back(x);
      }
      expect.pos = normalized(expect.pos);
      expect.neg = normalized(expect.neg);
      CHECK(fused == expect);
    }
  }
}
