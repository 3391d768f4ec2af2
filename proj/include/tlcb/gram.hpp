#pragma once

// Candidate bilinear forms on TL(X) written in the t-tilde basis, and exact
// checks of the conditions a canonical form would need: symmetry,
// anti-associativity <t_s t_w, t_x> = <t_w, t_s t_x>, nondegeneracy, and
// <t_w, t_x> = delta_{w,x} mod v^-1 Z[v^-1].  Exploratory only.

#include "tlcb/tl_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tlcb {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct GramCandidate {
  CoxeterGraph graph;
  PolyMatrix matrix;  // indexed by TLAlgebra::elements()
  static GramCandidate identity(const TLAlgebra& A);
};

struct GramReport {
  bool symmetric = false;
  bool anti_associative = false;
  bool nondegenerate = false;
  bool unitriangular_mod_vinv = false;
  LaurentPoly determinant;
  std::vector<std::string> counterexamples;  // first few failures, replayable
};

/// Throws DomainError when G's graph or size does not match A.
GramReport gram_check(TLAlgebra& A, const GramCandidate& G);

/// Exact determinant by fraction-free elimination.
LaurentPoly determinant(PolyMatrix m);

/// Basis of the right nullspace over Q(v), scaled to have entries in A.
/// Every returned vector is checked to satisfy m x = 0 exactly.
std::vector<std::vector<LaurentPoly>> nullspace(PolyMatrix m);

struct AntiAssociativeSolve {
  std::size_t unknowns = 0;   // entries on and above the diagonal
  std::size_t equations = 0;  // nonzero constraint rows
  std::size_t rank = 0;
  std::vector<GramCandidate> solutions;  // a basis of the symmetric solutions
  std::vector<GramReport> reports;       // gram_check of each basis solution
};

/// Assembles the linear constraints that anti-associativity imposes on a
/// symmetric form and solves them exactly.
AntiAssociativeSolve solve_anti_associative(TLAlgebra& A);

}  // namespace tlcb
