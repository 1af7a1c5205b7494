#include "korbit/phi.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "korbit/nilpotent.hpp"

namespace korbit {

namespace {

std::vector<int> rank_profile_unsigned(const Mat& x) {
  int N = static_cast<int>(x.size());
  std::vector<int> r{N};
  Mat p = x;
  for (int m = 1; m <= N; ++m) {
    r.push_back(mat_rank(p));
    p = mat_mul(p, x);
  }
  if (r.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
  return r;
}

// profile[m-1] = {rank restricted to V+, rank restricted to V-} of x^m.
std::vector<std::pair<int, int>> rank_profile_signed(const std::vector<int>& sign, const Mat& x) {
  int N = static_cast<int>(x.size());
  std::vector<std::pair<int, int>> out;
  Mat p = x;
  for (int m = 1; m <= N; ++m) {
    Mat cp, cm;  // columns of x^m from each summand, stored as rows
    for (int j = 0; j < N; ++j) {
      Vec col(N);
      for (int i = 0; i < N; ++i) col[i] = p[i][j];
      (sign[j] > 0 ? cp : cm).push_back(col);
    }
    out.emplace_back(span_rank(cp), span_rank(cm));
    p = mat_mul(p, x);
  }
  if (out.back().first != 0 || out.back().second != 0) {
    throw std::invalid_argument("matrix is not nilpotent");
  }
  return out;
}

}  // namespace

SignedTableau signed_jordan_type(const std::vector<int>& sign, const Mat& x,
                                 const std::vector<SignedTableau>& candidates) {
  int N = static_cast<int>(x.size());
  if (sign.empty()) {
    auto r = rank_profile_unsigned(x);
    Partition cols;  // transpose of the Jordan type
    for (int m = 1; m <= N; ++m) {
      if (r[m - 1] - r[m] > 0) cols.push_back(r[m - 1] - r[m]);
    }
    Partition shape = transpose(normalized(cols));
    SignedTableau t;
    for (int part : shape) t.rows.emplace_back(part, 0);
    t.normalize();
    return t;
  }
  auto profile = rank_profile_signed(sign, x);
  const SignedTableau* match = nullptr;
  for (const auto& cand : candidates) {
    bool ok = true;
    for (int m = 1; m <= N && ok; ++m) {
      if (cand.rank(m, 1) != profile[m - 1].first || cand.rank(m, -1) != profile[m - 1].second) {
        ok = false;
      }
    }
    if (ok) {
      if (match) throw std::logic_error("rank profile matches two tableaux");
      match = &cand;
    }
  }
  if (!match) throw std::logic_error("rank profile matches no valid tableau");
  return *match;
}

SignedTableau generic_signed_type(const SymmetricPair& pair, const std::vector<int>& sign,
                                  const std::vector<Mat>& space,
                                  const std::vector<SignedTableau>& candidates,
                                  const PhiOptions& opt) {
  if (space.empty()) return zero_tableau(pair);
  int N = static_cast<int>(space[0].size());
  std::vector<SignedTableau> sampled;
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<unsigned long long>(trial));
    long long h = 4LL << trial;
    Mat x = mat_zero(N, N);
    for (const auto& b : space) {
      long long c = static_cast<long long>(rng() % (2 * h + 1)) - h;
      if (c != 0) x = mat_add(x, mat_scale(Rat(c), b));
    }
    sampled.push_back(signed_jordan_type(sign, x, candidates));
  }
  for (const auto& best : sampled) {
    bool maximal = true;
    for (const auto& t : sampled) {
      if (!tableau_closure_leq(pair, t, best)) {
        maximal = false;
        break;
      }
    }
    if (maximal) return best;
  }
  throw std::runtime_error("genericity failure: incomparable sampled types (seed " +
                           std::to_string(opt.seed) + "); retry with more trials");
}

PhiComputer::PhiComputer(const KGB& kgb, const PhiOptions& opt) : kgb_(kgb), opt_(opt) {
  candidates_ = all_tableaux(kgb.pair);
  if (kgb.pair.kind != PairKind::ComplexGL) {
    model_ = build_model(kgb.pair);
    sign_ = model_->sign;
  }
}

std::vector<Mat> PhiComputer::conormal_at(int orbit, const std::vector<int>& steps) {
  if (kgb_.pair.kind != PairKind::ComplexGL) {
    return conormal_space(*model_, kgb_.reps[orbit], steps);
  }
  // Pair-of-flags model on one gl_n: the conormal space at (standard flag,
  // w-shifted flag) is the span of the E_ab lying in both lower nilradicals.
  int n = kgb_.pair.p;
  const auto& w = kgb_.clans[orbit].symbols;
  std::vector<int> winv(n);
  for (int i = 0; i < n; ++i) winv[w[i]] = i;
  auto block = [&](int c) {
    int b = 0;
    for (int s : steps) {
      if (s <= c) ++b;
    }
    return b;
  };
  std::vector<Mat> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (block(a) > block(b) && block(winv[a]) > block(winv[b])) {
        Mat e = mat_zero(n, n);
        e[a][b] = 1;
        out.push_back(e);
      }
    }
  }
  return out;
}

const SignedTableau& PhiComputer::phi_B(int orbit) {
  auto it = phi_b_cache_.find(orbit);
  if (it != phi_b_cache_.end()) return it->second;
  ParabolicType borel;
  auto steps = flag_steps(kgb_.pair, borel);
  auto space = conormal_at(orbit, steps);
  int expected = dim_full_flag(kgb_.pair) - kgb_.dims[orbit];
  if (static_cast<int>(space.size()) != expected) {
    throw std::logic_error("conormal dimension mismatch at full flag");
  }
  SignedTableau t = generic_signed_type(kgb_.pair, sign_, space, candidates_, opt_);
  return phi_b_cache_.emplace(orbit, std::move(t)).first->second;
}

SignedTableau PhiComputer::phi_P(const ParabolicType& P, const PClass& cls) {
  SignedTableau t = phi_B(cls.qc);
  auto steps = flag_steps(kgb_.pair, P);
  auto space = conormal_at(cls.qc, steps);
  if (kgb_.pair.kind != PairKind::ComplexGL &&
      static_cast<int>(space.size()) != dim_partial_flag(kgb_.pair, P) - cls.dim) {
    throw std::logic_error("conormal dimension mismatch at partial flag");
  }
  SignedTableau check = generic_signed_type(kgb_.pair, sign_, space, candidates_, opt_);
  if (!(check == t)) {
    throw std::logic_error("parabolic conormal type disagrees with dense-member type");
  }
  return t;
}

std::vector<SignedTableau> nilpotent_orbits_theta(const SymmetricPair& pair,
                                                  const ParabolicType& P) {
  Partition rich = richardson_partition(pair, P);
  std::vector<SignedTableau> out;
  for (const auto& t : all_tableaux(pair)) {
    if (dominates(rich, t.underlying())) out.push_back(t);
  }
  return out;
}

int orbit_dim_from_tableau(const SymmetricPair& pair, const SignedTableau& t) {
  int d = orbit_dimension_complex(pair.ambient(), t.underlying());
  if (pair.kind == PairKind::ComplexGL) return d;
  if (d % 2 != 0) throw std::logic_error("ambient orbit dimension is odd");
  return d / 2;
}

bool is_P_regular(const SymmetricPair& pair, const ParabolicType& P, const SignedTableau& phi) {
  return orbit_dim_from_tableau(pair, phi) == dim_g_mod_p(pair, P);
}

}  // namespace korbit
