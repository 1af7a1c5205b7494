#pragma once

#include <vector>

#include "korbit/clans.hpp"
#include "korbit/linalg.hpp"
#include "korbit/pair.hpp"

namespace korbit {

// Exact matrix model of (g, k, s) for Upq, SpR, SpPQ.  The involution is
// conjugation by diag(sign); for the symplectic pairs the form is
// antidiagonal, omega(e_i, e_{N+1-i}) = +1 for i <= n and -1 for i > n.
struct MatrixModel {
  SymmetricPair pair;
  int N = 0;         // defining dimension
  int flag_len = 0;  // proper flag steps: N-1 (GL ambient), n (Sp ambient)
  bool symplectic = false;
  std::vector<int> sign;   // theta sign per coordinate (+1 in V+, -1 in V-)
  std::vector<Mat> g_basis;
  std::vector<Mat> k_basis;
  std::vector<Mat> s_basis;
  Mat omega;  // empty for GL ambient
};

MatrixModel build_model(const SymmetricPair& pair);

// Flags are N linearly independent vectors v_1..v_N, F_i = span(v_1..v_i).
// For symplectic models the chain is perp-closed: F_{N-i} = F_i^perp.

// Extend isotropic v_1..v_n to a perp-closed full flag (identity for GL).
Flag complete_flag(const MatrixModel& m, std::vector<Vec> vectors);

// Coordinate flag of an all-sign clan (a closed K-orbit).
Flag closed_orbit_flag(const MatrixModel& m, const Clan& c);

// Read the clan of the orbit through the flag from exact rank invariants.
Clan identify_clan(const MatrixModel& m, const Flag& f);

// dim K - dim Stab_K(F) over the proper steps (full flag variety orbit dim).
int flag_orbit_dimension(const MatrixModel& m, const Flag& f);

// The P^1 of flags obtained by moving step `alpha` (1..flag_len) through the
// pencil v_alpha + t * v_{alpha+1}, sampled at several exact values of t
// including t = 0 (the input flag) and t = infinity.
std::vector<Flag> pencil_samples(const MatrixModel& m, const Flag& f, int alpha);

// Proper flag steps retained by the parabolic type (indices i with alpha_i
// outside the Levi).
std::vector<int> flag_steps(const SymmetricPair& pair, const ParabolicType& P);

// Basis of {y in g : y F_i c F_i for the given steps}.
std::vector<Mat> parabolic_subalgebra(const MatrixModel& m, const Flag& f,
                                      const std::vector<int>& steps);

// Basis of {x in s : tr(x y) = 0 for all y in the parabolic at f}.
std::vector<Mat> conormal_space(const MatrixModel& m, const Flag& f,
                                const std::vector<int>& steps);

}  // namespace korbit
