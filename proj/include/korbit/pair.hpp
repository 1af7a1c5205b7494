#pragma once

#include <set>
#include <string>

#include "korbit/weyl.hpp"

namespace korbit {

enum class Ambient { GL, Sp };

// The four implemented symmetric pairs.
enum class PairKind {
  ComplexGL,  // (gl_n + gl_n, diagonal gl_n): GL(n,C) as a real group
  Upq,        // (gl_{p+q}, gl_p + gl_q): U(p,q)
  SpR,        // (sp_{2n}, gl_n): Sp(2n,R)
  SpPQ,       // (sp_{2p+2q}, sp_{2p} + sp_{2q}): Sp(p,q)
};

struct SymmetricPair {
  PairKind kind;
  int p = 0;  // Upq/SpPQ first parameter; rank n for ComplexGL/SpR
  int q = 0;  // Upq/SpPQ second parameter

  static SymmetricPair complex_gl(int n) { return {PairKind::ComplexGL, n, 0}; }
  static SymmetricPair upq(int p, int q) { return {PairKind::Upq, p, q}; }
  static SymmetricPair sp_r(int n) { return {PairKind::SpR, n, 0}; }
  static SymmetricPair sp_pq(int p, int q) { return {PairKind::SpPQ, p, q}; }

  // Dimension of the defining representation / clan length.
  int defining_dim() const {
    switch (kind) {
      case PairKind::ComplexGL: return p;
      case PairKind::Upq: return p + q;
      case PairKind::SpR: return 2 * p;
      case PairKind::SpPQ: return 2 * (p + q);
    }
    return 0;
  }

  Ambient ambient() const {
    return (kind == PairKind::SpR || kind == PairKind::SpPQ) ? Ambient::Sp : Ambient::GL;
  }

  // Rank of the ambient root system (number of simple roots per factor).
  int root_rank() const {
    switch (kind) {
      case PairKind::ComplexGL: return p - 1;
      case PairKind::Upq: return p + q - 1;
      case PairKind::SpR: return p;
      case PairKind::SpPQ: return p + q;
    }
    return 0;
  }

  // Weyl group used in the fiber-count formula (one factor for ComplexGL).
  WeylType weyl() const {
    switch (kind) {
      case PairKind::ComplexGL: return {WeylFamily::TypeA, p};
      case PairKind::Upq: return {WeylFamily::TypeA, p + q};
      case PairKind::SpR: return {WeylFamily::TypeBC, p};
      case PairKind::SpPQ: return {WeylFamily::TypeBC, p + q};
    }
    return {WeylFamily::TypeA, 1};
  }

  int dim_k() const {
    switch (kind) {
      case PairKind::ComplexGL: return p * p;
      case PairKind::Upq: return p * p + q * q;
      case PairKind::SpR: return p * p;
      case PairKind::SpPQ: return p * (2 * p + 1) + q * (2 * q + 1);
    }
    return 0;
  }

  int dim_s() const {
    switch (kind) {
      case PairKind::ComplexGL: return p * p;
      case PairKind::Upq: return 2 * p * q;
      case PairKind::SpR: return p * (p + 1);
      case PairKind::SpPQ: return 4 * p * q;
    }
    return 0;
  }

  std::string to_string() const;
};

// Parses "upq:2,1", "spr:2", "sppq:1,1", "cgl:3".  Throws on malformed input.
SymmetricPair parse_pair(const std::string& text);

// Parabolic type: simple roots generating the Levi, 1-based in Bourbaki order
// for the ambient root system (for ComplexGL the subset is applied to both
// factors).  Empty set = Borel.
struct ParabolicType {
  std::set<int> levi;
};

// Number of positive roots of the ambient group (= dim of the full flag variety).
int dim_full_flag(const SymmetricPair& pair);

// Dimension of the partial flag variety of type P.
int dim_partial_flag(const SymmetricPair& pair, const ParabolicType& P);

// Complex dimension of g/p for the ambient symmetric pair (for ComplexGL this
// counts both factors).
int dim_g_mod_p(const SymmetricPair& pair, const ParabolicType& P);

// Levi block sizes over the defining coordinates; for Sp ambient the block
// containing the last coordinate is hyperoctahedral when the long root lies
// in the Levi.  Used both for Richardson partitions and for W(P).
LeviType levi_of(const SymmetricPair& pair, const ParabolicType& P);

void validate_parabolic(const SymmetricPair& pair, const ParabolicType& P);

}  // namespace korbit
