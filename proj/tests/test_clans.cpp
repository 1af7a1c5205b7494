#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "korbit/verify.hpp"

using namespace korbit;

TEST_CASE("clan counts for small pairs") {
  CHECK(enumerate_clans(SymmetricPair::upq(1, 1)).size() == 3);
  CHECK(enumerate_clans(SymmetricPair::upq(2, 1)).size() == 6);
  CHECK(enumerate_clans(SymmetricPair::upq(2, 2)).size() == 21);
  CHECK(enumerate_clans(SymmetricPair::sp_r(2)).size() == 11);
  CHECK(enumerate_clans(SymmetricPair::sp_pq(1, 1)).size() == 4);
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_clans(SymmetricPair::complex_gl(n)).size() ==
          static_cast<std::size_t>(factorial(n)));
  }
}

TEST_CASE("clan strings validate and round through the enumeration") {
  for (const auto& pair :
       {SymmetricPair::upq(2, 1), SymmetricPair::sp_r(2), SymmetricPair::sp_pq(1, 1)}) {
    auto clans = enumerate_clans(pair);
    std::set<std::string> names;
    for (const auto& c : clans) {
      CHECK(clan_valid(pair, c));
      CHECK(names.insert(clan_to_string(pair, c)).second);
    }
  }
}

TEST_CASE("pairs-of-flags closure order is the Bruhat order") {
  for (int n = 2; n <= 5; ++n) {
    const KGB& kgb = cached_kgb(SymmetricPair::complex_gl(n));
    for (int a = 0; a < kgb.size(); ++a) {
      CHECK(kgb.dims[a] == n * (n - 1) / 2 + permutation_length(kgb.clans[a].symbols));
      for (int b = 0; b < kgb.size(); ++b) {
        CHECK(kgb.full_leq[a][b] == bruhat_leq(kgb.clans[a].symbols, kgb.clans[b].symbols));
      }
    }
  }
}

TEST_CASE("weak order edges raise dimension by one; unique open orbit") {
  for (const auto& pair :
       {SymmetricPair::upq(2, 2), SymmetricPair::sp_r(2), SymmetricPair::sp_r(3),
        SymmetricPair::sp_pq(1, 1), SymmetricPair::complex_gl(4)}) {
    const KGB& kgb = cached_kgb(pair);
    for (const auto& e : kgb.weak_edges) {
      CHECK(kgb.dims[e.to] == kgb.dims[e.from] + 1);
      CHECK(!e.dashed);
      CHECK(e.alpha >= 1);
    }
    int open = kgb.open_orbit();
    CHECK(kgb.dims[open] == dim_full_flag(pair));
    for (int i = 0; i < kgb.size(); ++i) CHECK(kgb.full_leq[i][open]);
    // full order extends the weak order and respects dimension
    for (int a = 0; a < kgb.size(); ++a) {
      for (int b = 0; b < kgb.size(); ++b) {
        if (kgb.full_leq[a][b] && a != b) CHECK(kgb.dims[a] < kgb.dims[b]);
      }
    }
    for (const auto& e : kgb.weak_edges) CHECK(kgb.full_leq[e.from][e.to]);
  }
}

TEST_CASE("saturation is idempotent and contains the weak relations") {
  for (const auto& pair : {SymmetricPair::sp_r(2), SymmetricPair::upq(2, 1),
                           SymmetricPair::sp_pq(1, 1), SymmetricPair::complex_gl(3)}) {
    const KGB& kgb = cached_kgb(pair);
    auto rel = saturation_relations(kgb.weak_edges, {});
    CHECK(saturation_relations(kgb.weak_edges, rel) == rel);
    for (const auto& e : kgb.weak_edges) {
      CHECK(rel.count({e.from, e.to}) == 1);
    }
  }
}

TEST_CASE("projection to parabolic class sets") {
  for (const auto& pair : {SymmetricPair::sp_r(2), SymmetricPair::upq(2, 1)}) {
    const KGB& kgb = cached_kgb(pair);
    // Borel: one class per orbit
    auto borel = project_to_P(kgb, ParabolicType{});
    CHECK(borel.size() == static_cast<std::size_t>(kgb.size()));
    for (const auto& cls : borel) CHECK(cls.members.size() == 1);
    // full Levi: a single class containing everything
    ParabolicType full;
    for (int i = 1; i <= pair.root_rank(); ++i) full.levi.insert(i);
    auto point = project_to_P(kgb, full);
    CHECK(point.size() == 1);
    CHECK(point[0].members.size() == static_cast<std::size_t>(kgb.size()));
    CHECK(point[0].dim == 0);
  }
}

TEST_CASE("sp4 closed orbits and class counts") {
  const KGB& kgb = cached_kgb(SymmetricPair::sp_r(2));
  int closed = 0;
  for (int i = 0; i < kgb.size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < kgb.size(); ++j) {
      if (j != i && kgb.full_leq[j][i]) minimal = false;
    }
    if (minimal) ++closed;
  }
  CHECK(closed == 4);
  CHECK(project_to_P(kgb, ParabolicType{{1}}).size() == 6);
  CHECK(project_to_P(kgb, ParabolicType{{2}}).size() == 4);
}

TEST_CASE("bruhat oracle sanity") {
  CHECK(bruhat_leq({0, 1, 2}, {2, 1, 0}));
  CHECK(!bruhat_leq({2, 1, 0}, {0, 1, 2}));
  CHECK(bruhat_leq({1, 0, 2}, {2, 0, 1}));
  CHECK(!bruhat_leq({1, 2, 0}, {2, 0, 1}));  // distinct elements of equal length
  CHECK(permutation_length({2, 1, 0}) == 3);
  CHECK(permutation_length({0, 1, 2, 3}) == 0);
}
