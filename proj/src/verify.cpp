#include "korbit/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace korbit {

const KGB& cached_kgb(const SymmetricPair& pair) {
  static std::map<std::string, std::unique_ptr<KGB>> cache;
  auto key = pair.to_string();
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<KGB>(build_kgb(pair))).first;
  }
  return *it->second;
}

Session::Session(const PhiOptions& opt) : opt_(opt) {}

PhiComputer& Session::phi(const SymmetricPair& pair) {
  auto key = pair.to_string();
  auto it = phis_.find(key);
  if (it == phis_.end()) {
    it = phis_.emplace(key, std::make_unique<PhiComputer>(cached_kgb(pair), opt_)).first;
  }
  return *it->second;
}

Partition rs_shape(const std::vector<int>& w) {
  std::vector<std::vector<int>> rows;
  for (int x : w) {
    int cur = x;
    bool placed = false;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        placed = true;
        break;
      }
      std::swap(cur, *it);
    }
    if (!placed) rows.push_back({cur});
  }
  Partition shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return normalized(shape);
}

std::vector<ParabolicType> all_parabolics(const SymmetricPair& pair) {
  int r = pair.root_rank();
  std::vector<ParabolicType> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    ParabolicType P;
    for (int i = 1; i <= r; ++i) {
      if (mask & (1 << (i - 1))) P.levi.insert(i);
    }
    out.push_back(P);
  }
  return out;
}

namespace {

ParabolicType levi_set(std::initializer_list<int> roots) {
  ParabolicType P;
  for (int r : roots) P.levi.insert(r);
  return P;
}

std::string flip_signs(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c == '+') {
      c = '-';
    } else if (c == '-') {
      c = '+';
    }
  }
  return out;
}

struct DiagramVertex {
  std::string name;
  int dim;
  std::string phi;
};

struct DiagramEdge {
  std::string from, to;
  int alpha;  // 0 = dashed
  bool dashed;
};

struct ActualPoset {
  // id -> (dim, phi string)
  std::map<std::string, std::pair<int, std::string>> vertices;
  std::set<std::tuple<std::string, std::string, int, bool>> edges;
};

ActualPoset actual_from(const ClosurePoset& poset,
                        const std::map<std::string, std::string>& phi_by_id) {
  ActualPoset a;
  for (std::size_t i = 0; i < poset.ids.size(); ++i) {
    a.vertices[poset.ids[i]] = {poset.dims[i], phi_by_id.at(poset.ids[i])};
  }
  for (const auto& e : poset.edges) {
    a.edges.insert({poset.ids[e.from], poset.ids[e.to], e.alpha, e.dashed});
  }
  return a;
}

// Labeled-DAG comparison against a reference diagram; vertices are matched by
// (dimension, image tableau), globally flipping all signs if needed.  Returns
// the name -> id assignment on success.
bool match_diagram(const ActualPoset& actual, const std::vector<DiagramVertex>& verts,
                   const std::vector<DiagramEdge>& edges,
                   std::map<std::string, std::string>* assignment, std::string* why) {
  for (bool flip : {false, true}) {
    std::map<std::string, std::string> name_to_id;
    bool ok = (actual.vertices.size() == verts.size());
    std::set<std::string> used;
    for (const auto& v : verts) {
      if (!ok) break;
      std::string want_phi = flip ? flip_signs(v.phi) : v.phi;
      std::string found;
      int hits = 0;
      for (const auto& [id, info] : actual.vertices) {
        if (info.first == v.dim && info.second == want_phi && !used.count(id)) {
          found = id;
          ++hits;
        }
      }
      if (hits != 1) {
        ok = false;
        if (why) *why = "vertex " + v.name + " matched " + std::to_string(hits) + " candidates";
        break;
      }
      name_to_id[v.name] = found;
      used.insert(found);
    }
    if (!ok) continue;
    std::set<std::tuple<std::string, std::string, int, bool>> expect;
    for (const auto& e : edges) {
      expect.insert({name_to_id[e.from], name_to_id[e.to], e.alpha, e.dashed});
    }
    if (expect == actual.edges) {
      if (assignment) *assignment = name_to_id;
      return true;
    }
    if (why) *why = "edge sets differ";
  }
  return false;
}

std::string tableau_id(const SignedTableau& t) { return t.to_string(); }

struct PData {
  std::vector<PClass> classes;
  std::vector<SignedTableau> phis;  // per class
  ClosurePoset full;
  std::map<std::string, std::string> phi_by_id;
};

PData compute_p(Session& s, const SymmetricPair& pair, const ParabolicType& P) {
  const KGB& kgb = s.kgb(pair);
  PData d;
  d.classes = project_to_P(kgb, P);
  for (const auto& cls : d.classes) {
    d.phis.push_back(s.phi(pair).phi_P(P, cls));
    d.phi_by_id[kgb.id(cls.qc)] = d.phis.back().to_string();
  }
  d.full = full_poset_P(kgb, P, d.classes);
  return d;
}

CheckResult make(const std::string& name, bool pass, const std::string& detail = "") {
  return {name, pass, detail};
}

const std::vector<SymmetricPair>& fixture_pairs() {
  static const std::vector<SymmetricPair> pairs = {
      SymmetricPair::sp_r(2),  SymmetricPair::sp_r(3),      SymmetricPair::sp_pq(1, 1),
      SymmetricPair::sp_pq(2, 1), SymmetricPair::upq(1, 1), SymmetricPair::upq(2, 1),
      SymmetricPair::upq(2, 2), SymmetricPair::complex_gl(2), SymmetricPair::complex_gl(3),
      SymmetricPair::complex_gl(4), SymmetricPair::complex_gl(5),
  };
  return pairs;
}

// ---- reference diagrams for Sp(4,R) ----------------------------------------

const std::vector<DiagramVertex>& sp4_full_vertices() {
  static const std::vector<DiagramVertex> v = {
      {"Q", 4, "1^2+ 1^2-"},   {"R+", 3, "2^1+ 1^1+ 1^1-"}, {"R-", 3, "2^1- 1^1+ 1^1-"},
      {"S", 3, "2^1+ 2^1-"},   {"T+", 2, "2^2+"},           {"T-", 2, "2^2-"},
      {"S'", 2, "2^1+ 2^1-"},  {"T'+", 1, "2^2+"},          {"T'-", 1, "2^2-"},
      {"U+", 1, "4^1+"},       {"U-", 1, "4^1-"},
  };
  return v;
}

const std::vector<DiagramEdge>& sp4_full_edges() {
  static const std::vector<DiagramEdge> e = {
      {"R+", "Q", 2, false},  {"R-", "Q", 2, false},  {"S", "Q", 1, false},
      {"T+", "R+", 1, false}, {"T-", "R-", 1, false}, {"S'", "S", 2, false},
      {"T'+", "T+", 2, false}, {"T'-", "T-", 2, false}, {"U+", "T+", 2, false},
      {"U-", "T-", 2, false}, {"U+", "S'", 1, false}, {"U-", "S'", 1, false},
      {"T+", "S", 0, true},   {"T-", "S", 0, true},   {"S'", "R+", 0, true},
      {"S'", "R-", 0, true},
  };
  return e;
}

const std::vector<DiagramVertex>& sp4_palpha_vertices() {
  static const std::vector<DiagramVertex> v = {
      {"Q", 3, "1^2+ 1^2-"},  {"R+", 2, "2^1+ 1^1+ 1^1-"}, {"R-", 2, "2^1- 1^1+ 1^1-"},
      {"S'", 1, "2^1+ 2^1-"}, {"T'+", 0, "2^2+"},          {"T'-", 0, "2^2-"},
  };
  return v;
}

const std::vector<DiagramEdge>& sp4_palpha_edges() {
  static const std::vector<DiagramEdge> e = {
      {"R+", "Q", 2, false},   {"R-", "Q", 2, false},   {"T'+", "R+", 2, false},
      {"T'-", "R-", 2, false}, {"S'", "R+", 0, true},   {"S'", "R-", 0, true},
  };
  return e;
}

const std::vector<DiagramVertex>& sp4_pbeta_vertices() {
  static const std::vector<DiagramVertex> v = {
      {"Q", 3, "1^2+ 1^2-"},
      {"S", 2, "2^1+ 2^1-"},
      {"T+", 1, "2^2+"},
      {"T-", 1, "2^2-"},
  };
  return v;
}

const std::vector<DiagramEdge>& sp4_pbeta_edges() {
  static const std::vector<DiagramEdge> e = {
      {"S", "Q", 1, false},
      {"T+", "S", 0, true},
      {"T-", "S", 0, true},
  };
  return e;
}

// ---- criteria --------------------------------------------------------------

std::vector<CheckResult> criterion1(Session& s) {
  std::vector<CheckResult> out;
  SymmetricPair pair = SymmetricPair::sp_r(2);
  const KGB& kgb = s.kgb(pair);
  out.push_back(make("sp4r full flag orbit count", kgb.size() == 11,
                     "got " + std::to_string(kgb.size())));
  std::map<std::string, std::string> phi_by_id;
  for (int i = 0; i < kgb.size(); ++i) phi_by_id[kgb.id(i)] = s.phi(pair).phi_B(i).to_string();
  std::string why;
  bool ok = match_diagram(actual_from(full_poset(kgb), phi_by_id), sp4_full_vertices(),
                          sp4_full_edges(), nullptr, &why);
  out.push_back(make("sp4r full closure diagram and moment images", ok, why));
  return out;
}

std::vector<CheckResult> criterion2(Session& s) {
  std::vector<CheckResult> out;
  SymmetricPair pair = SymmetricPair::sp_r(2);
  const KGB& kgb = s.kgb(pair);
  ParabolicType pa = levi_set({1}), pb = levi_set({2});
  PData da = compute_p(s, pair, pa);
  PData db = compute_p(s, pair, pb);
  out.push_back(make("sp4r short-root parabolic class count", da.classes.size() == 6,
                     "got " + std::to_string(da.classes.size())));
  out.push_back(make("sp4r long-root parabolic class count", db.classes.size() == 4,
                     "got " + std::to_string(db.classes.size())));
  std::map<std::string, std::string> assign_a, assign_b;
  std::string why;
  bool oka = match_diagram(actual_from(da.full, da.phi_by_id), sp4_palpha_vertices(),
                           sp4_palpha_edges(), &assign_a, &why);
  out.push_back(make("sp4r short-root parabolic diagram", oka, why));
  bool okb = match_diagram(actual_from(db.full, db.phi_by_id), sp4_pbeta_vertices(),
                           sp4_pbeta_edges(), &assign_b, &why);
  out.push_back(make("sp4r long-root parabolic diagram", okb, why));

  // Short-root projection: order-reversing bijection onto the theta-nilpotent
  // tableaux below the Richardson orbit.
  {
    auto targets = nilpotent_orbits_theta(pair, pa);
    std::set<std::string> img, want;
    for (const auto& t : targets) want.insert(t.to_string());
    for (const auto& t : da.phis) img.insert(t.to_string());
    bool bij = (img == want) && (img.size() == da.classes.size());
    bool rev = true;
    for (std::size_t a = 0; a < da.classes.size(); ++a) {
      for (std::size_t b = 0; b < da.classes.size(); ++b) {
        bool oleq = kgb.full_leq[da.classes[a].qc][da.classes[b].qc];
        bool tgeq = tableau_closure_leq(pair, da.phis[b], da.phis[a]);
        if (oleq != tgeq) rev = false;
      }
    }
    out.push_back(make("sp4r short-root moment map order-reversing bijection", bij && rev));
  }
  // Regular sets and the non-closed regular class of the long-root projection.
  if (oka && okb) {
    auto reg_set = [&](const PData& d, const ParabolicType& P,
                       const std::map<std::string, std::string>& assign) {
      std::map<std::string, std::string> id_to_name;
      for (const auto& [name, id] : assign) id_to_name[id] = name;
      std::set<std::string> names;
      for (std::size_t c = 0; c < d.classes.size(); ++c) {
        if (is_P_regular(pair, P, d.phis[c])) {
          names.insert(id_to_name.at(kgb.id(d.classes[c].qc)));
        }
      }
      return names;
    };
    auto ra = reg_set(da, pa, assign_a);
    auto rb = reg_set(db, pb, assign_b);
    out.push_back(make("sp4r short-root regular classes",
                       ra == std::set<std::string>{"T'+", "T'-", "S'"}));
    out.push_back(
        make("sp4r long-root regular classes", rb == std::set<std::string>{"T+", "T-", "S"}));
    // The class named S must be regular but not closed.
    auto closed = closed_classes(kgb, pb, db.classes);
    bool s_not_closed = false;
    for (std::size_t c = 0; c < db.classes.size(); ++c) {
      if (kgb.id(db.classes[c].qc) == assign_b.at("S")) s_not_closed = !closed[c];
    }
    out.push_back(make("sp4r long-root regular non-closed class", s_not_closed));
  }
  // Long-root projection sends the top class to the zero orbit: already part
  // of the diagram match (vertex Q with the all-ones tableau).
  return out;
}

std::vector<CheckResult> criterion3(Session& s) {
  bool all = true;
  std::string detail;
  for (const auto& pair : fixture_pairs()) {
    for (const auto& P : all_parabolics(pair)) {
      PData d = compute_p(s, pair, P);
      std::map<std::string, Int> fiber;
      for (const auto& t : d.phis) fiber[t.to_string()] += 1;
      Int total = 0;
      for (const auto& t : s.phi(pair).all_valid()) {
        Int predicted = predicted_fiber_size(pair, P, t.underlying());
        Int geometric = fiber.count(t.to_string()) ? fiber[t.to_string()] : Int(0);
        total += predicted;
        if (predicted != geometric && all) {
          all = false;
          detail = pair.to_string() + " tableau " + t.to_string() + ": predicted " +
                   predicted.str() + " vs geometric " + geometric.str();
        }
      }
      if (total != Int(d.classes.size()) && all) {
        all = false;
        detail = pair.to_string() + ": fiber total " + total.str() + " vs " +
                 std::to_string(d.classes.size()) + " classes";
      }
    }
  }
  return {make("fiber counts: representation formula vs geometry", all, detail)};
}

std::vector<CheckResult> criterion4(Session& s) {
  std::vector<CheckResult> out;
  SymmetricPair pair = SymmetricPair::sp_pq(1, 1);
  const KGB& kgb = s.kgb(pair);
  out.push_back(make("sp(1,1) full flag orbit count", kgb.size() == 4,
                     "got " + std::to_string(kgb.size())));
  PData d = compute_p(s, pair, levi_set({2}));
  Int two_fiber = 0;
  for (const auto& t : d.phis) {
    if (t.to_string() == "2^1+ 2^1-") two_fiber += 1;
  }
  out.push_back(make("sp(1,1) long-root projection two-to-one fiber", two_fiber == 2));
  std::set<WIrrep> got;
  for (const auto& m : springer_members(Ambient::Sp, {2, 2})) got.insert(m.irrep);
  std::set<WIrrep> want = {WIrrep{{1}, {1}}, WIrrep{{}, {2}}};
  out.push_back(make("sp4 subregular orbit local systems", got == want));
  return out;
}

std::vector<CheckResult> criterion5(Session& s) {
  bool all = true;
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    SymmetricPair pair = SymmetricPair::sp_r(n);
    Partition shape(n, 2);
    ParabolicType P = parabolic_from_even_orbit(Ambient::Sp, n, shape);
    const KGB& kgb = s.kgb(pair);
    PData d = compute_p(s, pair, P);
    auto closed = closed_classes(kgb, P, d.classes);
    std::vector<std::size_t> regular;
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      if (is_P_regular(pair, P, d.phis[c])) regular.push_back(c);
    }
    bool ok = (regular.size() == static_cast<std::size_t>(n + 1));
    for (std::size_t c : regular) ok = ok && closed[c];
    // images are distinct and exactly the closure-maximal supported tableaux
    std::set<std::string> img;
    for (std::size_t c : regular) img.insert(d.phis[c].to_string());
    auto theta = nilpotent_orbits_theta(pair, P);
    std::set<std::string> maximal;
    for (const auto& t : theta) {
      bool is_max = true;
      for (const auto& u : theta) {
        if (!(u == t) && tableau_closure_leq(pair, t, u)) is_max = false;
      }
      if (is_max) maximal.insert(t.to_string());
    }
    ok = ok && (img.size() == regular.size()) && (img == maximal);
    if (!ok && all) {
      all = false;
      detail = pair.to_string() + ": " + std::to_string(regular.size()) + " regular classes";
    }
  }
  return {make("sp(2n,R) even-orbit parabolic regular classes", all, detail)};
}

std::vector<CheckResult> criterion6(Session& s) {
  bool all = true;
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    SymmetricPair pair = SymmetricPair::upq(n, n);
    ParabolicType P;
    for (int i = 1; i <= 2 * n - 1; ++i) {
      if (i != n) P.levi.insert(i);
    }
    const KGB& kgb = s.kgb(pair);
    PData d = compute_p(s, pair, P);
    auto theta = nilpotent_orbits_theta(pair, P);
    std::set<std::string> img, want;
    for (const auto& t : d.phis) img.insert(t.to_string());
    for (const auto& t : theta) want.insert(t.to_string());
    bool ok = (img == want) && (img.size() == d.classes.size());
    for (std::size_t a = 0; a < d.classes.size() && ok; ++a) {
      for (std::size_t b = 0; b < d.classes.size() && ok; ++b) {
        bool oleq = kgb.full_leq[d.classes[a].qc][d.classes[b].qc];
        bool tgeq = tableau_closure_leq(pair, d.phis[b], d.phis[a]);
        if (oleq != tgeq) ok = false;
      }
    }
    int regular = 0;
    for (const auto& t : d.phis) {
      if (is_P_regular(pair, P, t)) ++regular;
    }
    ok = ok && (regular == n + 1);
    if (!ok && all) {
      all = false;
      detail = pair.to_string() + ": regular=" + std::to_string(regular);
    }
  }
  return {make("u(n,n) middle-node parabolic moment bijection", all, detail)};
}

std::vector<CheckResult> criterion7(Session& s) {
  bool all = true;
  std::string detail;
  for (int n = 2; n <= 6; ++n) {
    SymmetricPair pair = SymmetricPair::complex_gl(n);
    const KGB& kgb = s.kgb(pair);
    for (int i = 0; i < kgb.size(); ++i) {
      Partition got = s.phi(pair).phi_B(i).underlying();
      Partition want = rs_shape(kgb.clans[i].symbols);
      if (got != want) {
        all = false;
        detail = "n=" + std::to_string(n) + " w=" + kgb.id(i) + ": " + partition_to_string(got) +
                 " vs " + partition_to_string(want);
        break;
      }
    }
    if (!all) break;
  }
  return {make("pair-of-flags moment images match insertion shapes", all, detail)};
}

std::vector<CheckResult> criterion8(Session&) {
  std::vector<CheckResult> out;
  SymmetricPair sp4 = SymmetricPair::sp_r(2);
  out.push_back(make("sp4 short-root moment degree one",
                     moment_degree(sp4, levi_set({1})) == 1));
  out.push_back(make("sp4 long-root moment degree two",
                     moment_degree(sp4, levi_set({2})) == 2));
  bool gl = true;
  for (int n = 2; n <= 5; ++n) {
    SymmetricPair pair = SymmetricPair::complex_gl(n);
    for (const auto& P : all_parabolics(pair)) {
      if (moment_degree(pair, P) != 1) gl = false;
    }
  }
  out.push_back(make("gl moment maps birational", gl));
  return out;
}

std::vector<CheckResult> criterion9(Session& s) {
  std::vector<CheckResult> out;
  bool order_rev = true, reg_min = true, lagrangian = true, qc_char = true;
  bool sat_idem = true, inj_maximal = true, birat = true;
  for (const auto& pair : fixture_pairs()) {
    const KGB& kgb = s.kgb(pair);
    {
      auto rel = saturation_relations(kgb.weak_edges, {});
      if (saturation_relations(kgb.weak_edges, rel) != rel) sat_idem = false;
    }
    for (const auto& P : all_parabolics(pair)) {
      PData d = compute_p(s, pair, P);
      auto weak = weak_poset_P(kgb, P, d.classes);
      std::map<std::string, SignedTableau> phi_of;
      for (std::size_t c = 0; c < d.classes.size(); ++c) {
        phi_of[kgb.id(d.classes[c].qc)] = d.phis[c];
      }
      for (const auto& e : weak.edges) {
        if (!tableau_closure_leq(pair, phi_of[weak.ids[e.to]], phi_of[weak.ids[e.from]])) {
          order_rev = false;
        }
      }
      auto wmin = weak_minimal_classes(kgb, P, d.classes);
      for (std::size_t c = 0; c < d.classes.size(); ++c) {
        if (is_P_regular(pair, P, d.phis[c]) && !wmin[c]) reg_min = false;
        // half-dimension integrality: orbit_dim_from_tableau throws on odd
        try {
          orbit_dim_from_tableau(pair, d.phis[c]);
        } catch (...) {
          lagrangian = false;
        }
      }
      // dense member characterization: unique member with no Levi-simple ascent
      for (const auto& cls : d.classes) {
        int count = 0;
        for (int v : cls.members) {
          bool has_ascent = false;
          for (std::size_t slot = 0; slot < kgb.actions[v].size(); ++slot) {
            if (P.levi.count(simple_root_of_label(pair, static_cast<int>(slot) + 1)) &&
                !kgb.actions[v][slot].neighbors.empty()) {
              has_ascent = true;
            }
          }
          if (!has_ascent) ++count;
        }
        if (count != 1) qc_char = false;
      }
      // birational case: regular classes closed, images distinct and maximal
      if (moment_degree(pair, P) == 1) {
        auto closed = closed_classes(kgb, P, d.classes);
        auto theta = nilpotent_orbits_theta(pair, P);
        std::set<std::string> maximal;
        for (const auto& t : theta) {
          bool is_max = true;
          for (const auto& u : theta) {
            if (!(u == t) && tableau_closure_leq(pair, t, u)) is_max = false;
          }
          if (is_max) maximal.insert(t.to_string());
        }
        std::set<std::string> img;
        int nreg = 0;
        for (std::size_t c = 0; c < d.classes.size(); ++c) {
          if (!is_P_regular(pair, P, d.phis[c])) continue;
          ++nreg;
          img.insert(d.phis[c].to_string());
          if (!closed[c]) birat = false;
        }
        if (static_cast<int>(img.size()) != nreg) birat = false;
        for (const auto& t : img) {
          if (!maximal.count(t)) birat = false;
        }
      }
    }
    // injectivity over maximal parabolics for the GL-ambient and SpR pairs
    if (pair.kind == PairKind::Upq || pair.kind == PairKind::SpR) {
      for (int omit = 1; omit <= pair.root_rank(); ++omit) {
        ParabolicType P;
        for (int i = 1; i <= pair.root_rank(); ++i) {
          if (i != omit) P.levi.insert(i);
        }
        PData d = compute_p(s, pair, P);
        std::set<std::string> img;
        for (const auto& t : d.phis) img.insert(t.to_string());
        if (img.size() != d.classes.size()) inj_maximal = false;
      }
    }
  }
  out.push_back(make("moment map reverses weak order", order_rev));
  out.push_back(make("regular classes are weak-order minimal", reg_min));
  out.push_back(make("moment images have integral half-dimension", lagrangian));
  out.push_back(make("dense class member characterization", qc_char));
  out.push_back(make("saturation is idempotent", sat_idem));
  out.push_back(make("maximal-parabolic moment maps injective", inj_maximal));
  out.push_back(make("birational moment maps: regular classes closed", birat));

  // tableau encode/decode and profile injectivity
  {
    bool ok = true;
    for (const auto& pair : fixture_pairs()) {
      if (pair.defining_dim() > 8) continue;
      auto ts = all_tableaux(pair);
      std::set<std::vector<int>> profiles;
      for (const auto& t : ts) {
        if (!(SignedTableau::parse(t.to_string()) == t)) ok = false;
        std::vector<int> prof;
        for (int m = 1; m <= pair.defining_dim(); ++m) {
          prof.push_back(t.rank(m, 1));
          prof.push_back(t.rank(m, -1));
          prof.push_back(t.rank(m, 0));
        }
        if (!profiles.insert(prof).second) ok = false;
      }
    }
    out.push_back(make("tableau string and rank-profile round trips", ok));
  }
  // Weyl character sanity at desk scale
  {
    bool ok = true;
    std::vector<WeylType> ws = {{WeylFamily::TypeA, 2}, {WeylFamily::TypeA, 3},
                                {WeylFamily::TypeA, 4}, {WeylFamily::TypeBC, 1},
                                {WeylFamily::TypeBC, 2}, {WeylFamily::TypeBC, 3}};
    for (const auto& w : ws) {
      auto irr = irreps(w);
      auto cls = conjugacy_classes(w);
      Int order = group_order(w);
      Int sum_sizes = 0;
      for (const auto& c : cls) sum_sizes += class_size(w, c);
      if (sum_sizes != order) ok = false;
      for (const auto& a : irr) {
        for (const auto& b : irr) {
          Int dot = 0;
          for (const auto& c : cls) {
            dot += class_size(w, c) * character_value(w, a, c) * character_value(w, b, c);
          }
          if (dot != (a == b ? order : Int(0))) ok = false;
        }
      }
    }
    out.push_back(make("character orthogonality at desk scale", ok));
  }
  {
    // induced-sign decompositions: dimension identity and Frobenius agreement
    bool ok = true;
    std::vector<std::pair<WeylType, LeviType>> cases = {
        {{WeylFamily::TypeA, 3}, {{false, 2}, {false, 1}}},
        {{WeylFamily::TypeA, 4}, {{false, 2}, {false, 2}}},
        {{WeylFamily::TypeBC, 2}, {{false, 2}}},
        {{WeylFamily::TypeBC, 2}, {{true, 1}, {false, 1}}},
        {{WeylFamily::TypeBC, 3}, {{false, 1}, {true, 2}}},
    };
    for (const auto& [w, l] : cases) {
      Int lorder = 1;
      for (const auto& f : l) {
        lorder *= f.hyperoctahedral ? group_order({WeylFamily::TypeBC, f.size})
                                    : factorial(f.size);
      }
      Int total = 0;
      auto decomp = induced_sign_decomposition(w, l);
      for (const auto& [irr, mult] : decomp) {
        total += mult * irrep_dimension(w, irr);
        if (mult != sign_multiplicity(w, l, irr)) ok = false;
      }
      if (total * lorder != group_order(w)) ok = false;
    }
    out.push_back(make("induced sign modules at desk scale", ok));
  }
  return out;
}

std::string serialize_fixture_outputs(Session& s) {
  std::ostringstream os;
  for (const auto& pair : fixture_pairs()) {
    for (const auto& P : all_parabolics(pair)) {
      os << pair.to_string() << " levi";
      for (int r : P.levi) os << ' ' << r;
      os << '\n';
      auto records = orbit_records(s.kgb(pair), P, s.phi(pair));
      for (const auto& r : records) {
        os << r.id << ' ' << r.dimension << ' ' << r.phi << ' ' << r.is_closed << ' '
           << r.is_regular << ' ' << r.predicted_fiber << ' ' << r.geometric_fiber << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_criterion(Session& s, int criterion) {
  switch (criterion) {
    case 1: return criterion1(s);
    case 2: return criterion2(s);
    case 3: return criterion3(s);
    case 4: return criterion4(s);
    case 5: return criterion5(s);
    case 6: return criterion6(s);
    case 7: return criterion7(s);
    case 8: return criterion8(s);
    case 9: return criterion9(s);
    default: return {make("unknown criterion", false)};
  }
}

CheckResult seed_stability_check(int trials) {
  std::vector<unsigned long long> seeds = {20240, 777, 424243};
  std::string reference;
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    PhiOptions opt;
    opt.seed = seeds[i];
    opt.trials = trials;
    Session session(opt);
    for (int k = 1; k <= 8; ++k) {
      for (const auto& r : run_criterion(session, k)) {
        if (!r.pass) {
          pass = false;
          detail = "seed " + std::to_string(seeds[i]) + ": " + r.name;
        }
      }
    }
    std::string dump = serialize_fixture_outputs(session);
    if (i == 0) {
      reference = dump;
    } else if (dump != reference) {
      pass = false;
      detail = "outputs differ between seeds";
    }
  }
  return {"results independent of sampling seed", pass, detail};
}

std::vector<CheckResult> verify_all(const PhiOptions& opt) {
  Session s(opt);
  std::vector<CheckResult> out;
  for (int k = 1; k <= 9; ++k) {
    for (auto& r : run_criterion(s, k)) out.push_back(std::move(r));
  }
  out.push_back(seed_stability_check(opt.trials));
  return out;
}

}  // namespace korbit
