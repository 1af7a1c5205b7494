#include "korbit/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace korbit {

namespace {

Mat elementary(int N, int a, int b) {
  Mat m = mat_zero(N, N);
  m[a][b] = 1;
  return m;
}

}  // namespace

MatrixModel build_model(const SymmetricPair& pair) {
  if (pair.kind == PairKind::ComplexGL) {
    throw std::invalid_argument("ComplexGL orbits are handled combinatorially");
  }
  MatrixModel m;
  m.pair = pair;
  m.N = pair.defining_dim();
  m.symplectic = (pair.ambient() == Ambient::Sp);
  int N = m.N;
  m.sign.assign(N, -1);
  switch (pair.kind) {
    case PairKind::Upq:
      for (int i = 0; i < pair.p; ++i) m.sign[i] = 1;
      break;
    case PairKind::SpR:
      for (int i = 0; i < pair.p; ++i) m.sign[i] = 1;
      break;
    case PairKind::SpPQ:
      for (int i = 0; i < pair.p; ++i) m.sign[i] = m.sign[N - 1 - i] = 1;
      break;
    default: break;
  }
  if (!m.symplectic) {
    m.flag_len = N - 1;
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        Mat e = elementary(N, a, b);
        m.g_basis.push_back(e);
        (m.sign[a] == m.sign[b] ? m.k_basis : m.s_basis).push_back(e);
      }
    }
    return m;
  }
  int n = N / 2;
  m.flag_len = n;
  m.omega = mat_zero(N, N);
  for (int i = 0; i < N; ++i) m.omega[i][N - 1 - i] = (i < n) ? 1 : -1;
  auto sigma = [&](int a) { return a < n ? 1 : -1; };
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      int ap = N - 1 - a, bp = N - 1 - b;
      Mat e;
      if (b == ap) {
        e = elementary(N, a, b);  // self-paired entry, unconstrained
      } else if (std::make_pair(a, b) < std::make_pair(bp, ap)) {
        e = elementary(N, a, b);
        Mat f = elementary(N, bp, ap);
        e = mat_add(e, mat_scale(Rat(-sigma(a) * sigma(b)), f));
      } else {
        continue;
      }
      m.g_basis.push_back(e);
      (m.sign[a] == m.sign[b] ? m.k_basis : m.s_basis).push_back(e);
    }
  }
  if (static_cast<int>(m.k_basis.size()) != pair.dim_k() ||
      static_cast<int>(m.s_basis.size()) != pair.dim_s()) {
    throw std::logic_error("matrix model dimension mismatch");
  }
  return m;
}

namespace {

Vec omega_row(const MatrixModel& m, const Vec& v) {
  // Functional u -> omega(v, u) = v^T Omega u.
  Vec out(m.N, Rat(0));
  for (int i = 0; i < m.N; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.N; ++j) out[j] += v[i] * m.omega[i][j];
  }
  return out;
}

}  // namespace

Flag complete_flag(const MatrixModel& m, std::vector<Vec> vectors) {
  if (!m.symplectic) {
    if (static_cast<int>(vectors.size()) != m.N) throw std::invalid_argument("need a full flag");
    return vectors;
  }
  int n = m.flag_len;
  vectors.resize(n);
  for (int k = n + 1; k <= m.N; ++k) {
    // F_k = F_{N-k}^perp: pick any new vector of the perp.
    std::vector<Vec> rows;
    for (int i = 0; i < m.N - k; ++i) rows.push_back(omega_row(m, vectors[i]));
    std::vector<Vec> cands;
    if (rows.empty()) {
      for (int i = 0; i < m.N; ++i) {
        Vec e(m.N, Rat(0));
        e[i] = 1;
        cands.push_back(e);
      }
    } else {
      cands = nullspace(rows);
    }
    bool found = false;
    for (const auto& c : cands) {
      std::vector<Vec> test(vectors.begin(), vectors.end());
      test.push_back(c);
      if (span_rank(test) == k) {
        vectors.push_back(c);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("flag completion failed");
  }
  return vectors;
}

Flag closed_orbit_flag(const MatrixModel& m, const Clan& c) {
  std::vector<int> plus_pool, minus_pool;
  switch (m.pair.kind) {
    case PairKind::Upq:
      for (int i = 0; i < m.pair.p; ++i) plus_pool.push_back(i);
      for (int i = m.pair.p; i < m.N; ++i) minus_pool.push_back(i);
      break;
    case PairKind::SpR:
      for (int i = 0; i < m.pair.p; ++i) plus_pool.push_back(i);
      for (int i = m.pair.p; i < m.N; ++i) minus_pool.push_back(i);
      break;
    case PairKind::SpPQ:
      for (int i = 0; i < m.pair.p; ++i) plus_pool.push_back(i);
      for (int i = m.pair.p; i < m.pair.p + m.pair.q; ++i) minus_pool.push_back(i);
      break;
    default: throw std::invalid_argument("bad pair");
  }
  std::vector<Vec> vectors;
  std::size_t np = 0, nm = 0;
  int len = m.symplectic ? m.flag_len : m.N;
  for (int i = 0; i < len; ++i) {
    int sym = c.symbols[i];
    Vec e(m.N, Rat(0));
    if (sym == Clan::PLUS) {
      e[plus_pool.at(np++)] = 1;
    } else if (sym == Clan::MINUS) {
      e[minus_pool.at(nm++)] = 1;
    } else {
      throw std::invalid_argument("closed orbits carry sign-only clans");
    }
    vectors.push_back(e);
  }
  return complete_flag(m, vectors);
}

namespace {

std::vector<int> side_indices(const MatrixModel& m, int s) {
  std::vector<int> out;
  for (int i = 0; i < m.N; ++i) {
    if (m.sign[i] == s) out.push_back(i);
  }
  return out;
}

Vec restrict_to(const Vec& v, const std::vector<int>& idx) {
  Vec out;
  for (int i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace

Clan identify_clan(const MatrixModel& m, const Flag& f) {
  int N = m.N;
  auto vp = side_indices(m, 1);
  auto vm = side_indices(m, -1);
  std::vector<int> A(N + 1, 0), B(N + 1, 0);
  {
    std::vector<Vec> rp, rm;
    for (int i = 1; i <= N; ++i) {
      rp.push_back(restrict_to(f[i - 1], vp));
      rm.push_back(restrict_to(f[i - 1], vm));
      A[i] = i - span_rank(rm);  // dim(F_i intersect V+)
      B[i] = i - span_rank(rp);
    }
  }
  Clan c;
  c.symbols.assign(N, 0);
  std::vector<int> openers, closers;
  for (int i = 1; i <= N; ++i) {
    int dA = A[i] - A[i - 1], dB = B[i] - B[i - 1];
    if (dA == 1 && dB == 0) {
      c.symbols[i - 1] = Clan::PLUS;
    } else if (dA == 0 && dB == 1) {
      c.symbols[i - 1] = Clan::MINUS;
    } else if (dA == 0 && dB == 0) {
      openers.push_back(i);
      c.symbols[i - 1] = -100;  // placeholder
    } else if (dA == 1 && dB == 1) {
      closers.push_back(i);
      c.symbols[i - 1] = -100;
    } else {
      throw std::logic_error("invalid flag invariants");
    }
  }
  if (!closers.empty()) {
    // m(s,t) = dim(F_s cap (V+ + (F_t cap V-))) - A_s - B_s
    //        = #{matched pairs with opener <= s < closer <= t}.
    auto mvalue = [&](int s, int t) {
      // basis of F_t cap V-: kernel of the V+ restriction of (v_1..v_t)
      Mat eqs;  // |V+| x t
      for (int coord : vp) {
        Vec row;
        for (int j = 0; j < t; ++j) row.push_back(f[j][coord]);
        eqs.push_back(row);
      }
      std::vector<Vec> w = eqs.empty() ? std::vector<Vec>{} : nullspace(eqs);
      std::vector<Vec> wspan;
      for (const auto& cvec : w) {
        Vec u(N, Rat(0));
        for (int j = 0; j < t; ++j) {
          for (int k = 0; k < N; ++k) u[k] += cvec[j] * f[j][k];
        }
        wspan.push_back(u);
      }
      for (int coord : vp) {
        Vec e(N, Rat(0));
        e[coord] = 1;
        wspan.push_back(e);
      }
      int dimW = span_rank(wspan);
      std::vector<Vec> all(f.begin(), f.begin() + s);
      for (const auto& u : wspan) all.push_back(u);
      int dim_int = s + dimW - span_rank(all);
      return dim_int - A[s] - B[s];
    };
    std::vector<std::pair<int, int>> matches;  // (opener, closer)
    for (int t : closers) {
      int opener = -1;
      for (int s = 1; s < t; ++s) {
        if (mvalue(s, t) - mvalue(s, t - 1) == 1) {
          opener = s;
          break;
        }
      }
      if (opener < 0) throw std::logic_error("unmatched closer");
      matches.emplace_back(opener, t);
    }
    std::sort(matches.begin(), matches.end());
    for (std::size_t id = 0; id < matches.size(); ++id) {
      c.symbols[matches[id].first - 1] = static_cast<int>(id);
      c.symbols[matches[id].second - 1] = static_cast<int>(id);
    }
  }
  for (int s : c.symbols) {
    if (s == -100) throw std::logic_error("unmatched opener");
  }
  return c;
}

namespace {

int stabilizer_dimension(const MatrixModel& m, const Flag& f, const std::vector<int>& steps,
                         const std::vector<Mat>& basis) {
  Mat rows;
  int prev = 0;
  std::vector<std::vector<Vec>> images;  // images[b][j] = B_b * v_j, filled lazily
  images.assign(basis.size(), {});
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (int j = 0; j < m.N; ++j) images[b].push_back(mat_apply(basis[b], f[j]));
  }
  for (int step : steps) {
    std::vector<Vec> span(f.begin(), f.begin() + step);
    auto ann = annihilator(span, m.N);
    for (const auto& phi : ann) {
      for (int j = prev; j < step; ++j) {
        Vec row;
        for (std::size_t b = 0; b < basis.size(); ++b) row.push_back(dot(phi, images[b][j]));
        rows.push_back(row);
      }
    }
    prev = step;
  }
  if (rows.empty()) return static_cast<int>(basis.size());
  return static_cast<int>(basis.size()) - mat_rank(rows);
}

std::vector<int> full_steps(const MatrixModel& m) {
  std::vector<int> steps;
  for (int i = 1; i <= m.flag_len; ++i) steps.push_back(i);
  return steps;
}

}  // namespace

int flag_orbit_dimension(const MatrixModel& m, const Flag& f) {
  int stab = stabilizer_dimension(m, f, full_steps(m), m.k_basis);
  return static_cast<int>(m.k_basis.size()) - stab;
}

std::vector<Flag> pencil_samples(const MatrixModel& m, const Flag& f, int alpha) {
  if (alpha < 1 || alpha > m.flag_len) throw std::invalid_argument("bad simple root");
  static const int finite_ts[] = {0, 1, -1, 2, -2, 3, 5, 7};
  std::vector<Flag> out;
  int i = alpha - 1;  // replace v_alpha using v_{alpha+1}
  auto rebuild = [&](std::vector<Vec> vectors) {
    if (m.symplectic) {
      vectors.resize(m.flag_len);
      return complete_flag(m, std::move(vectors));
    }
    return vectors;
  };
  for (int t : finite_ts) {
    std::vector<Vec> vectors = f;
    for (int k = 0; k < m.N; ++k) vectors[i][k] += Rat(t) * f[i + 1][k];
    out.push_back(rebuild(std::move(vectors)));
  }
  {
    std::vector<Vec> vectors = f;
    std::swap(vectors[i], vectors[i + 1]);
    out.push_back(rebuild(std::move(vectors)));
  }
  return out;
}

std::vector<int> flag_steps(const SymmetricPair& pair, const ParabolicType& P) {
  validate_parabolic(pair, P);
  int len = (pair.ambient() == Ambient::Sp) ? pair.root_rank() : pair.defining_dim() - 1;
  std::vector<int> steps;
  for (int i = 1; i <= len; ++i) {
    if (!P.levi.count(i)) steps.push_back(i);
  }
  return steps;
}

std::vector<Mat> parabolic_subalgebra(const MatrixModel& m, const Flag& f,
                                      const std::vector<int>& steps) {
  Mat rows;
  int prev = 0;
  for (int step : steps) {
    std::vector<Vec> span(f.begin(), f.begin() + step);
    auto ann = annihilator(span, m.N);
    for (const auto& phi : ann) {
      for (int j = prev; j < step; ++j) {
        Vec row;
        for (const auto& b : m.g_basis) row.push_back(dot(phi, mat_apply(b, f[j])));
        rows.push_back(row);
      }
    }
    prev = step;
  }
  std::vector<Vec> coeffs;
  if (rows.empty()) {
    for (std::size_t b = 0; b < m.g_basis.size(); ++b) {
      Vec v(m.g_basis.size(), Rat(0));
      v[b] = 1;
      coeffs.push_back(v);
    }
  } else {
    coeffs = nullspace(rows);
  }
  std::vector<Mat> out;
  for (const auto& c : coeffs) {
    Mat x = mat_zero(m.N, m.N);
    for (std::size_t b = 0; b < m.g_basis.size(); ++b) {
      if (c[b] == 0) continue;
      x = mat_add(x, mat_scale(c[b], m.g_basis[b]));
    }
    out.push_back(x);
  }
  return out;
}

std::vector<Mat> conormal_space(const MatrixModel& m, const Flag& f,
                                const std::vector<int>& steps) {
  auto pb = parabolic_subalgebra(m, f, steps);
  Mat rows;
  for (const auto& y : pb) {
    Vec row;
    for (const auto& s : m.s_basis) row.push_back(trace_product(s, y));
    rows.push_back(row);
  }
  std::vector<Vec> coeffs = rows.empty() ? std::vector<Vec>{} : nullspace(rows);
  std::vector<Mat> out;
  for (const auto& c : coeffs) {
    Mat x = mat_zero(m.N, m.N);
    for (std::size_t b = 0; b < m.s_basis.size(); ++b) {
      if (c[b] == 0) continue;
      x = mat_add(x, mat_scale(c[b], m.s_basis[b]));
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace korbit
