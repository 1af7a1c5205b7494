#include "korbit/clans.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "korbit/model.hpp"

namespace korbit {

std::string clan_to_string(const SymmetricPair& pair, const Clan& c) {
  std::string out;
  if (pair.kind == PairKind::ComplexGL) {
    for (int v : c.symbols) out += static_cast<char>('1' + v);
    return out;
  }
  for (int v : c.symbols) {
    if (v == Clan::PLUS) {
      out += '+';
    } else if (v == Clan::MINUS) {
      out += '-';
    } else {
      out += static_cast<char>('1' + v);
    }
  }
  return out;
}

namespace {

bool is_permutation(const std::vector<int>& w) {
  std::vector<bool> seen(w.size(), false);
  for (int v : w) {
    if (v < 0 || v >= static_cast<int>(w.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// partner[i] = matched position for pair symbols, -1 for signs; ids checked.
std::vector<int> pair_partners(const std::vector<int>& symbols) {
  int N = static_cast<int>(symbols.size());
  std::map<int, std::vector<int>> where;
  std::vector<int> partner(N, -1);
  for (int i = 0; i < N; ++i) {
    if (symbols[i] >= 0) where[symbols[i]].push_back(i);
  }
  int next = 0;
  for (auto& [id, pos] : where) {
    if (pos.size() != 2) throw std::invalid_argument("pair id must occur exactly twice");
    if (id != next++) throw std::invalid_argument("pair ids must be 0,1,... in opener order");
    partner[pos[0]] = pos[1];
    partner[pos[1]] = pos[0];
  }
  // ids numbered by first occurrence
  int expect = 0;
  for (int i = 0; i < N; ++i) {
    if (symbols[i] >= 0 && partner[i] > i) {
      if (symbols[i] != expect++) throw std::invalid_argument("pair ids out of order");
    }
  }
  return partner;
}

bool u_clan_valid(int p, int q, const std::vector<int>& symbols) {
  if (static_cast<int>(symbols.size()) != p + q) return false;
  int plus = 0, minus = 0;
  for (int v : symbols) {
    if (v == Clan::PLUS) ++plus;
    if (v == Clan::MINUS) ++minus;
  }
  if (plus - minus != p - q) return false;
  try {
    pair_partners(symbols);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

// Reversal symmetry shared by the symplectic pairs: flip_signs for SpR.
bool mirror_symmetric(const std::vector<int>& symbols, bool flip_signs, bool allow_self_pairs) {
  int N = static_cast<int>(symbols.size());
  auto partner = pair_partners(symbols);
  for (int i = 0; i < N; ++i) {
    int j = N - 1 - i;
    if (symbols[i] == Clan::PLUS || symbols[i] == Clan::MINUS) {
      int want = symbols[i];
      if (flip_signs) want = (want == Clan::PLUS) ? Clan::MINUS : Clan::PLUS;
      if (symbols[j] != want) return false;
    } else {
      if (symbols[j] < 0) return false;
      if (partner[j] != N - 1 - partner[i]) return false;
      if (!allow_self_pairs && partner[i] == j) return false;
    }
  }
  return true;
}

}  // namespace

bool clan_valid(const SymmetricPair& pair, const Clan& c) {
  switch (pair.kind) {
    case PairKind::ComplexGL:
      return static_cast<int>(c.symbols.size()) == pair.p && is_permutation(c.symbols);
    case PairKind::Upq:
      return u_clan_valid(pair.p, pair.q, c.symbols);
    case PairKind::SpR:
      return u_clan_valid(pair.p, pair.p, c.symbols) &&
             mirror_symmetric(c.symbols, /*flip_signs=*/true, /*allow_self_pairs=*/true);
    case PairKind::SpPQ:
      return u_clan_valid(2 * pair.p, 2 * pair.q, c.symbols) &&
             mirror_symmetric(c.symbols, /*flip_signs=*/false, /*allow_self_pairs=*/false);
  }
  return false;
}

namespace {

void enumerate_u_clans(int p, int q, std::vector<Clan>& out) {
  int N = p + q;
  std::vector<int> symbols(N, -100);
  int next_id = 0;
  auto rec = [&](auto&& self, int pos, int plus, int minus) -> void {
    if (pos == N) {
      Clan c;
      c.symbols = symbols;
      out.push_back(c);
      return;
    }
    if (symbols[pos] != -100) {
      self(self, pos + 1, plus, minus);
      return;
    }
    if (plus < p) {
      symbols[pos] = Clan::PLUS;
      self(self, pos + 1, plus + 1, minus);
      symbols[pos] = -100;
    }
    if (minus < q) {
      symbols[pos] = Clan::MINUS;
      self(self, pos + 1, plus, minus + 1);
      symbols[pos] = -100;
    }
    for (int j = pos + 1; j < N; ++j) {
      if (symbols[j] != -100) continue;
      symbols[pos] = symbols[j] = next_id;
      ++next_id;
      self(self, pos + 1, plus, minus);
      --next_id;
      symbols[pos] = symbols[j] = -100;
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace

std::vector<Clan> enumerate_clans(const SymmetricPair& pair) {
  std::vector<Clan> out;
  if (pair.kind == PairKind::ComplexGL) {
    std::vector<int> w(pair.p);
    std::iota(w.begin(), w.end(), 0);
    do {
      Clan c;
      c.symbols = w;
      out.push_back(c);
    } while (std::next_permutation(w.begin(), w.end()));
  } else {
    int p = pair.p, q = pair.q;
    if (pair.kind == PairKind::SpR) q = p;
    if (pair.kind == PairKind::SpPQ) {
      p = 2 * pair.p;
      q = 2 * pair.q;
    }
    std::vector<Clan> all;
    enumerate_u_clans(p, q, all);
    for (const auto& c : all) {
      if (clan_valid(pair, c)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int permutation_length(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++inv;
    }
  }
  return inv;
}

bool bruhat_leq(const std::vector<int>& a, const std::vector<int>& b) {
  // Ehresmann criterion: increasing sorted prefixes compare entrywise.
  int n = static_cast<int>(a.size());
  std::vector<int> pa, pb;
  for (int i = 0; i < n; ++i) {
    pa.push_back(a[i]);
    pb.push_back(b[i]);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    for (int j = 0; j <= i; ++j) {
      if (pa[j] > pb[j]) return false;
    }
  }
  return true;
}

int KGB::index_of(const Clan& c) const {
  auto it = std::lower_bound(clans.begin(), clans.end(), c);
  if (it == clans.end() || !(*it == c)) throw std::logic_error("unknown clan");
  return static_cast<int>(it - clans.begin());
}

int KGB::open_orbit() const {
  int top = dim_full_flag(pair);
  int found = -1;
  for (int i = 0; i < size(); ++i) {
    if (dims[i] == top) {
      if (found >= 0) throw std::logic_error("open orbit not unique");
      found = i;
    }
  }
  if (found < 0) throw std::logic_error("no open orbit");
  return found;
}

// Saturation: whenever Q4 ->a Q3 and Q2 ->a Q1 are weak edges and Q4 < Q2 is
// a known codimension-one relation, the relation Q3 < Q1 is added; repeats
// until a fixed point.  Returns all codimension-one closure relations.
std::set<std::pair<int, int>> saturation_relations(const std::vector<PosetEdge>& weak,
                                                   std::set<std::pair<int, int>> initial) {
  std::set<std::pair<int, int>> rel = std::move(initial);
  for (const auto& e : weak) rel.insert({e.from, e.to});
  std::map<int, std::vector<std::pair<int, int>>> by_alpha;  // alpha -> (from,to)
  for (const auto& e : weak) by_alpha[e.alpha].push_back({e.from, e.to});
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [alpha, edges] : by_alpha) {
      for (const auto& [q4, q3] : edges) {
        for (const auto& [q2, q1] : edges) {
          if (q4 == q2) continue;
          if (!rel.count({q4, q2})) continue;
          if (q3 == q1) continue;
          if (rel.insert({q3, q1}).second) grew = true;
        }
      }
    }
  }
  return rel;
}

namespace {

std::vector<std::vector<bool>> transitive_closure(int n,
                                                  const std::set<std::pair<int, int>>& rel) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : rel) adj[a].push_back(b);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    leq[s][s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v]) {
        if (!leq[s][w]) {
          leq[s][w] = true;
          q.push_back(w);
        }
      }
    }
  }
  return leq;
}

void build_complex_gl(KGB& kgb) {
  int n = kgb.pair.p;
  kgb.clans = enumerate_clans(kgb.pair);
  int base = n * (n - 1) / 2;
  for (const auto& c : kgb.clans) kgb.dims.push_back(base + permutation_length(c.symbols));
  // One action slot per simple root of each factor: labels 1..n-1 act on the
  // right (first factor), labels n..2n-2 on the left (second factor).  The
  // labels must stay distinct so the closure-saturation rule never pairs a
  // left move with a right move.
  kgb.actions.assign(kgb.size(), std::vector<RootAction>(2 * (n - 1)));
  for (int i = 0; i < kgb.size(); ++i) {
    const auto& w = kgb.clans[i].symbols;
    for (int alpha = 1; alpha <= n - 1; ++alpha) {
      std::vector<int> right = w, left = w;
      std::swap(right[alpha - 1], right[alpha]);  // w s_alpha
      for (int k = 0; k < n; ++k) {               // s_alpha w
        if (left[k] == alpha - 1) {
          left[k] = alpha;
        } else if (left[k] == alpha) {
          left[k] = alpha - 1;
        }
      }
      for (int side = 0; side < 2; ++side) {
        const auto& v = (side == 0) ? right : left;
        int label = alpha + side * (n - 1);
        RootAction& act = kgb.actions[i][label - 1];
        if (permutation_length(v) > permutation_length(w)) {
          Clan c;
          c.symbols = v;
          act.neighbors.push_back(kgb.index_of(c));
        }
        act.type = act.neighbors.empty() ? RootType::ComplexDescent : RootType::ComplexAscent;
        for (int t : act.neighbors) {
          kgb.weak_edges.push_back({i, t, label, false});
        }
      }
    }
  }
}

void build_geometric(KGB& kgb) {
  MatrixModel model = build_model(kgb.pair);
  kgb.clans = enumerate_clans(kgb.pair);
  int n = kgb.size();
  kgb.dims.assign(n, -1);
  kgb.reps.assign(n, {});
  kgb.actions.assign(n, std::vector<RootAction>(model.flag_len));
  std::vector<bool> seen(n, false);
  std::deque<int> queue;
  auto admit = [&](const Clan& c, const Flag& f) {
    int idx = kgb.index_of(c);
    if (!seen[idx]) {
      seen[idx] = true;
      kgb.reps[idx] = f;
      kgb.dims[idx] = flag_orbit_dimension(model, f);
      queue.push_back(idx);
    }
    return idx;
  };
  int len = model.symplectic ? model.flag_len : model.N;
  for (const auto& c : kgb.clans) {
    bool all_signs = true;
    for (int i = 0; i < len; ++i) {
      if (c.symbols[i] >= 0) all_signs = false;
    }
    if (!all_signs) continue;
    Flag f = closed_orbit_flag(model, c);
    if (!(identify_clan(model, f) == c)) throw std::logic_error("closed-orbit flag mislabeled");
    admit(c, f);
  }
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int alpha = 1; alpha <= model.flag_len; ++alpha) {
      auto samples = pencil_samples(model, kgb.reps[i], alpha);
      std::set<int> met;
      int dense = i;
      for (const auto& f : samples) {
        int idx = admit(identify_clan(model, f), f);
        met.insert(idx);
        if (kgb.dims[idx] > kgb.dims[dense]) dense = idx;
      }
      RootAction& act = kgb.actions[i][alpha - 1];
      if (dense != i) {
        if (kgb.dims[dense] != kgb.dims[i] + 1) {
          throw std::logic_error("weak edge does not raise dimension by one");
        }
        act.neighbors = {dense};
        act.type = (met.size() == 2) ? RootType::ComplexAscent : RootType::NonCompactImaginary;
        kgb.weak_edges.push_back({i, dense, alpha, false});
      } else if (met.size() == 1) {
        act.type = RootType::CompactImaginary;
      } else if (met.size() == 2) {
        act.type = RootType::ComplexDescent;
      } else {
        act.type = RootType::Real;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) throw std::logic_error("orbit not reached from closed orbits: " + kgb.id(i));
  }
}

}  // namespace

KGB build_kgb(const SymmetricPair& pair) {
  KGB kgb;
  kgb.pair = pair;
  if (pair.kind == PairKind::ComplexGL) {
    build_complex_gl(kgb);
  } else {
    build_geometric(kgb);
  }
  std::sort(kgb.weak_edges.begin(), kgb.weak_edges.end());
  kgb.weak_edges.erase(std::unique(kgb.weak_edges.begin(), kgb.weak_edges.end()),
                       kgb.weak_edges.end());
  auto rel = saturation_relations(kgb.weak_edges, {});
  kgb.full_leq = transitive_closure(kgb.size(), rel);
  kgb.open_orbit();  // uniqueness check
  return kgb;
}

namespace {

// Order vertices by (dim, id) and emit edges with deterministic ordering.
ClosurePoset make_poset(const std::vector<std::string>& ids, const std::vector<int>& dims,
                        std::vector<PosetEdge> edges) {
  int n = static_cast<int>(ids.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dims[a] != dims[b]) return dims[a] < dims[b];
    return ids[a] < ids[b];
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  ClosurePoset p;
  for (int i = 0; i < n; ++i) {
    p.ids.push_back(ids[order[i]]);
    p.dims.push_back(dims[order[i]]);
  }
  for (auto& e : edges) {
    e.from = pos[e.from];
    e.to = pos[e.to];
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  p.edges = edges;
  return p;
}

std::vector<std::string> all_ids(const KGB& kgb) {
  std::vector<std::string> ids;
  for (int i = 0; i < kgb.size(); ++i) ids.push_back(kgb.id(i));
  return ids;
}

// Covers of the order given by leq; solid/labeled when a weak edge matches.
std::vector<PosetEdge> cover_edges(const std::vector<std::vector<bool>>& leq,
                                   const std::vector<PosetEdge>& weak) {
  int n = static_cast<int>(leq.size());
  std::vector<PosetEdge> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      }
      if (!cover) continue;
      bool solid = false;
      int alpha = 0;
      for (const auto& e : weak) {
        if (e.from == a && e.to == b) {
          solid = true;
          alpha = e.alpha;
          break;
        }
      }
      out.push_back({a, b, alpha, !solid});
    }
  }
  return out;
}

}  // namespace

ClosurePoset weak_poset(const KGB& kgb) {
  return make_poset(all_ids(kgb), kgb.dims, kgb.weak_edges);
}

ClosurePoset full_poset(const KGB& kgb) {
  return make_poset(all_ids(kgb), kgb.dims, cover_edges(kgb.full_leq, kgb.weak_edges));
}

int simple_root_of_label(const SymmetricPair& pair, int label) {
  return (label - 1) % pair.root_rank() + 1;
}

std::vector<PClass> project_to_P(const KGB& kgb, const ParabolicType& P) {
  validate_parabolic(kgb.pair, P);
  int n = kgb.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : kgb.weak_edges) {
    if (P.levi.count(simple_root_of_label(kgb.pair, e.alpha))) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
  }
  std::vector<PClass> classes;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(classes.size());
    PClass cls;
    std::deque<int> q{s};
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      cls.members.push_back(v);
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = id;
          q.push_back(w);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    int best = cls.members[0];
    for (int v : cls.members) {
      if (kgb.dims[v] > kgb.dims[best]) best = v;
    }
    for (int v : cls.members) {
      if (v != best && kgb.dims[v] == kgb.dims[best]) {
        throw std::logic_error("dense class member not unique");
      }
    }
    // dense-member characterization: no Levi-simple ascent at the dense member
    for (std::size_t slot = 0; slot < kgb.actions[best].size(); ++slot) {
      if (P.levi.count(simple_root_of_label(kgb.pair, static_cast<int>(slot) + 1)) &&
          !kgb.actions[best][slot].neighbors.empty()) {
        throw std::logic_error("dense class member has a Levi-simple ascent");
      }
    }
    cls.qc = best;
    cls.dim = kgb.dims[best] - (dim_full_flag(kgb.pair) - dim_partial_flag(kgb.pair, P));
    classes.push_back(cls);
  }
  return classes;
}

namespace {

std::vector<int> class_of_orbit(const KGB& kgb, const std::vector<PClass>& classes) {
  std::vector<int> comp(kgb.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int v : classes[c].members) comp[v] = static_cast<int>(c);
  }
  return comp;
}

std::vector<PosetEdge> weak_edges_P(const KGB& kgb, const ParabolicType& P,
                                    const std::vector<PClass>& classes) {
  auto comp = class_of_orbit(kgb, classes);
  std::vector<PosetEdge> edges;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    int qc = classes[c].qc;
    for (int alpha = 1; alpha <= static_cast<int>(kgb.actions[qc].size()); ++alpha) {
      if (P.levi.count(simple_root_of_label(kgb.pair, alpha))) continue;
      for (int t : kgb.actions[qc][alpha - 1].neighbors) {
        if (comp[t] != static_cast<int>(c)) {
          edges.push_back({static_cast<int>(c), comp[t], alpha, false});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::string> class_ids(const KGB& kgb, const std::vector<PClass>& classes) {
  std::vector<std::string> ids;
  for (const auto& c : classes) ids.push_back(kgb.id(c.qc));
  return ids;
}

std::vector<int> class_dims(const std::vector<PClass>& classes) {
  std::vector<int> dims;
  for (const auto& c : classes) dims.push_back(c.dim);
  return dims;
}

}  // namespace

ClosurePoset weak_poset_P(const KGB& kgb, const ParabolicType& P,
                          const std::vector<PClass>& classes) {
  return make_poset(class_ids(kgb, classes), class_dims(classes), weak_edges_P(kgb, P, classes));
}

ClosurePoset full_poset_P(const KGB& kgb, const ParabolicType& P,
                          const std::vector<PClass>& classes) {
  int n = static_cast<int>(classes.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) leq[a][b] = kgb.full_leq[classes[a].qc][classes[b].qc];
  }
  return make_poset(class_ids(kgb, classes), class_dims(classes),
                    cover_edges(leq, weak_edges_P(kgb, P, classes)));
}

std::vector<bool> closed_classes(const KGB& kgb, const ParabolicType& P,
                                 const std::vector<PClass>& classes) {
  int n = static_cast<int>(classes.size());
  std::vector<bool> out(n, true);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && kgb.full_leq[classes[a].qc][classes[b].qc]) out[b] = false;
    }
  }
  return out;
}

std::vector<bool> weak_minimal_classes(const KGB& kgb, const ParabolicType& P,
                                       const std::vector<PClass>& classes) {
  auto edges = weak_edges_P(kgb, P, classes);
  std::vector<bool> out(classes.size(), true);
  for (const auto& e : edges) out[e.to] = false;
  return out;
}

}  // namespace korbit
