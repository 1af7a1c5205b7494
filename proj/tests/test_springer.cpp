#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "korbit/nilpotent.hpp"
#include "korbit/springer.hpp"
#include "korbit/tableau.hpp"

using namespace korbit;

namespace {

std::vector<Partition> symplectic_partitions(int m) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(m)) {
    if (valid_orbit_partition(Ambient::Sp, p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("type C correspondence is a bijection onto the irreps") {
  for (int n = 1; n <= 5; ++n) {
    WeylType w{WeylFamily::TypeBC, n};
    std::multiset<std::pair<Partition, Partition>> image;
    for (const auto& shape : symplectic_partitions(2 * n)) {
      for (const auto& m : springer_members(Ambient::Sp, shape)) {
        image.insert({m.irrep.first, m.irrep.second});
      }
    }
    std::multiset<std::pair<Partition, Partition>> want;
    for (const auto& s : irreps(w)) want.insert({s.first, s.second});
    CHECK(image == want);
  }
}

TEST_CASE("extreme orbits") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(springer_irrep(Ambient::Sp, Partition{2 * n}) == WIrrep{Partition{n}, {}});
    CHECK(springer_irrep(Ambient::Sp, Partition(2 * n, 1)) == WIrrep{{}, Partition(n, 1)});
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(springer_irrep(Ambient::GL, p) == WIrrep{p, {}});
      CHECK(springer_members(Ambient::GL, p).size() == 1);
    }
  }
}

TEST_CASE("local system counts bounded by the component group") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& shape : symplectic_partitions(2 * n)) {
      auto gens = component_group_G(Ambient::Sp, shape);
      auto members = springer_members(Ambient::Sp, shape);
      CHECK(members.size() >= 1);
      CHECK(members.size() <= (std::size_t(1) << gens.size()));
      CHECK(members[0].character.trivial());
      std::set<std::pair<Partition, Partition>> distinct;
      for (const auto& m : members) distinct.insert({m.irrep.first, m.irrep.second});
      CHECK(distinct.size() == members.size());
    }
  }
}

TEST_CASE("subregular sp4 orbit carries the reflection and chi representations") {
  std::set<std::pair<Partition, Partition>> got;
  for (const auto& m : springer_members(Ambient::Sp, {2, 2})) {
    got.insert({m.irrep.first, m.irrep.second});
  }
  std::set<std::pair<Partition, Partition>> want = {{{1}, {1}}, {{}, {2}}};
  CHECK(got == want);
}

TEST_CASE("a transposed table breaks the subregular fixture") {
  // negative control: swapping the bipartition sides must be detectable
  std::set<std::pair<Partition, Partition>> corrupted;
  for (const auto& m : springer_members(Ambient::Sp, {2, 2})) {
    corrupted.insert({m.irrep.second, m.irrep.first});
  }
  std::set<std::pair<Partition, Partition>> want = {{{1}, {1}}, {{}, {2}}};
  CHECK(corrupted != want);
}

TEST_CASE("invariant members per pair") {
  for (const auto& shape : symplectic_partitions(6)) {
    auto all = springer_members(Ambient::Sp, shape);
    CHECK(sp_invariants(SymmetricPair::sp_r(3), shape).size() == 1);
    CHECK(sp_invariants(SymmetricPair::sp_pq(2, 1), shape).size() == all.size());
  }
  for (const auto& shape : partitions_of(4)) {
    CHECK(sp_invariants(SymmetricPair::upq(2, 2), shape).size() == 1);
    CHECK(sp_invariants(SymmetricPair::complex_gl(4), shape).size() == 1);
  }
}

TEST_CASE("moment degrees") {
  SymmetricPair sp4 = SymmetricPair::sp_r(2);
  CHECK(moment_degree(sp4, ParabolicType{{1}}) == 1);
  CHECK(moment_degree(sp4, ParabolicType{{2}}) == 2);
  CHECK(moment_degree(sp4, ParabolicType{}) == 1);
  for (int n = 2; n <= 4; ++n) {
    SymmetricPair pair = SymmetricPair::complex_gl(n);
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      ParabolicType P;
      for (int i = 1; i < n; ++i) {
        if (mask & (1 << (i - 1))) P.levi.insert(i);
      }
      CHECK(moment_degree(pair, P) == 1);
    }
  }
}

TEST_CASE("full flag fiber predictions count the flag Weyl group") {
  // Borel case: fibers over all orbits sum to |K\B|
  struct Case {
    SymmetricPair pair;
    Int expect;
  };
  std::vector<Case> cases = {{SymmetricPair::upq(1, 1), 3},
                             {SymmetricPair::upq(2, 1), 6},
                             {SymmetricPair::sp_r(2), 11},
                             {SymmetricPair::sp_pq(1, 1), 4},
                             {SymmetricPair::complex_gl(3), 6},
                             {SymmetricPair::complex_gl(4), 24}};
  for (const auto& c : cases) {
    Int total = 0;
    for (const auto& t : all_tableaux(c.pair)) {
      total += predicted_fiber_size(c.pair, ParabolicType{}, t.underlying());
    }
    CHECK(total == c.expect);
  }
}

TEST_CASE("richardson partitions and even-orbit parabolics") {
  CHECK(richardson_partition(SymmetricPair::complex_gl(4), ParabolicType{{1, 3}}) ==
        Partition{2, 2});
  // both maximal parabolics of Sp(4) induce the subregular orbit
  CHECK(richardson_partition(SymmetricPair::sp_r(2), ParabolicType{{2}}) == Partition{2, 2});
  CHECK(richardson_partition(SymmetricPair::sp_r(2), ParabolicType{{1}}) == Partition{2, 2});
  for (int n = 1; n <= 3; ++n) {
    Partition shape(n, 2);
    CHECK(is_even_orbit(Ambient::Sp, n, shape));
    ParabolicType P = parabolic_from_even_orbit(Ambient::Sp, n, shape);
    std::set<int> expect;
    for (int i = 1; i < n; ++i) expect.insert(i);
    CHECK(P.levi == expect);
    CHECK(richardson_partition(SymmetricPair::sp_r(n), P) == shape);
  }
}
