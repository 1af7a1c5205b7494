#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "korbit/verify.hpp"

using namespace korbit;

namespace {

SignedTableau T(const std::string& s) { return SignedTableau::parse(s); }

std::set<std::string> tableau_strings(const SymmetricPair& pair) {
  std::set<std::string> out;
  for (const auto& t : all_tableaux(pair)) out.insert(t.to_string());
  return out;
}

}  // namespace

TEST_CASE("matrix models satisfy the dimension bookkeeping") {
  for (const auto& pair :
       {SymmetricPair::upq(1, 1), SymmetricPair::upq(2, 1), SymmetricPair::upq(2, 2),
        SymmetricPair::sp_r(2), SymmetricPair::sp_r(3), SymmetricPair::sp_pq(1, 1),
        SymmetricPair::sp_pq(2, 1)}) {
    MatrixModel model = build_model(pair);  // internal asserts check dim k / dim s
    CHECK(static_cast<int>(model.k_basis.size()) == pair.dim_k());
    CHECK(static_cast<int>(model.s_basis.size()) == pair.dim_s());
  }
}

TEST_CASE("valid tableau lists for small pairs") {
  CHECK(tableau_strings(SymmetricPair::upq(1, 1)) ==
        std::set<std::string>{"1^1+ 1^1-", "2^1+", "2^1-"});
  CHECK(tableau_strings(SymmetricPair::sp_r(2)) ==
        std::set<std::string>{"1^2+ 1^2-", "2^1+ 1^1+ 1^1-", "2^1- 1^1+ 1^1-", "2^1+ 2^1-",
                              "2^2+", "2^2-", "4^1+", "4^1-"});
  CHECK(tableau_strings(SymmetricPair::sp_pq(1, 1)) ==
        std::set<std::string>{"1^2+ 1^2-", "2^1+ 2^1-"});
}

TEST_CASE("tableau strings round-trip and rank profiles separate") {
  for (const auto& pair :
       {SymmetricPair::upq(2, 2), SymmetricPair::sp_r(3), SymmetricPair::sp_pq(2, 1),
        SymmetricPair::complex_gl(5)}) {
    auto ts = all_tableaux(pair);
    std::set<std::vector<int>> profiles;
    for (const auto& t : ts) {
      CHECK(SignedTableau::parse(t.to_string()) == t);
      CHECK(tableau_valid(pair, t));
      std::vector<int> prof;
      for (int m = 1; m <= pair.defining_dim(); ++m) {
        prof.push_back(t.rank(m, 1));
        prof.push_back(t.rank(m, -1));
        prof.push_back(t.rank(m, 0));
      }
      CHECK(profiles.insert(prof).second);
    }
  }
}

TEST_CASE("signed jordan type of explicit matrices") {
  SymmetricPair pair = SymmetricPair::upq(1, 1);
  auto cands = all_tableaux(pair);
  Mat e12 = mat_zero(2, 2), e21 = mat_zero(2, 2), zero = mat_zero(2, 2);
  e12[0][1] = 1;
  e21[1][0] = 1;
  std::vector<int> sign = {1, -1};
  CHECK(signed_jordan_type(sign, e12, cands) == T("2^1-"));
  CHECK(signed_jordan_type(sign, e21, cands) == T("2^1+"));
  CHECK(signed_jordan_type(sign, zero, cands) == T("1^1+ 1^1-"));
}

TEST_CASE("u(1,1) full flag moment images") {
  SymmetricPair pair = SymmetricPair::upq(1, 1);
  const KGB& kgb = cached_kgb(pair);
  REQUIRE(kgb.size() == 3);
  Session s;
  std::multiset<std::string> imgs;
  for (int i = 0; i < kgb.size(); ++i) imgs.insert(s.phi(pair).phi_B(i).to_string());
  CHECK(imgs == std::multiset<std::string>{"1^1+ 1^1-", "2^1+", "2^1-"});
  // closed points hit the regular nilpotents, the open orbit the zero orbit
  CHECK(s.phi(pair).phi_B(kgb.open_orbit()).to_string() == "1^1+ 1^1-");
}

TEST_CASE("orbit dimensions from tableaux") {
  CHECK(orbit_dim_from_tableau(SymmetricPair::upq(2, 2), zero_tableau(SymmetricPair::upq(2, 2))) ==
        0);
  CHECK(orbit_dim_from_tableau(SymmetricPair::upq(1, 1), T("2^1+")) == 1);
  CHECK(orbit_dim_from_tableau(SymmetricPair::sp_r(2), T("4^1+")) == 4);
  CHECK(orbit_dim_from_tableau(SymmetricPair::sp_r(2), T("2^2+")) == 3);
  // ComplexGL carries the full ambient dimension
  SignedTableau principal;
  principal.rows = {{3, 0}};
  CHECK(orbit_dim_from_tableau(SymmetricPair::complex_gl(3), principal) == 6);
}

TEST_CASE("insertion shape oracle") {
  CHECK(rs_shape({0, 1, 2, 3}) == Partition{4});
  CHECK(rs_shape({3, 2, 1, 0}) == Partition{1, 1, 1, 1});
  CHECK(rs_shape({1, 0, 2}) == Partition{2, 1});
  CHECK(rs_shape({1, 3, 0, 2}) == Partition{2, 2});
}

TEST_CASE("pairs-of-flags moment images for n=3 match insertion shapes") {
  SymmetricPair pair = SymmetricPair::complex_gl(3);
  const KGB& kgb = cached_kgb(pair);
  Session s;
  for (int i = 0; i < kgb.size(); ++i) {
    CHECK(s.phi(pair).phi_B(i).underlying() == rs_shape(kgb.clans[i].symbols));
  }
}

TEST_CASE("sp(1,1) long-root projection fibers") {
  SymmetricPair pair = SymmetricPair::sp_pq(1, 1);
  Session s;
  auto records = orbit_records(s.kgb(pair), ParabolicType{{2}}, s.phi(pair));
  REQUIRE(records.size() == 3);
  std::multiset<std::string> fibers;
  for (const auto& r : records) {
    CHECK(r.predicted_fiber == r.geometric_fiber);
    fibers.insert(r.phi);
  }
  CHECK(fibers.count("2^1+ 2^1-") == 2);
  CHECK(fibers.count("1^2+ 1^2-") == 1);
}

TEST_CASE("conormal spaces close the dimension count") {
  // exercised by the internal assertions of PhiComputer across a mixed pair
  SymmetricPair pair = SymmetricPair::sp_r(2);
  Session s;
  const KGB& kgb = s.kgb(pair);
  for (int i = 0; i < kgb.size(); ++i) s.phi(pair).phi_B(i);
  for (const auto& P : all_parabolics(pair)) {
    for (const auto& cls : project_to_P(kgb, P)) s.phi(pair).phi_P(P, cls);
  }
  CHECK(true);
}
