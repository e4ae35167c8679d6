#pragma once

// Integer-lattice linear algebra: determinants, Smith and Hermite normal
// forms, integral kernels and solves, sublattice indices, exterior powers.

#include <optional>
#include <vector>

#include "trop/numeric.hpp"

namespace trop {

// Fraction-free determinant of a square integer matrix.
Int det_int(const IntMat& m);

struct SNFResult {
  std::vector<Int> diagonal;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;
  IntMat U, V;        // U * M * V = diag(diagonal), both unimodular
  IntMat Uinv, Vinv;  // exact inverses of the transforms
};

// Smith normal form with transforms. Deterministic.
SNFResult smith_normal_form(const IntMat& m);

// Diagonal-only Smith form of a sparse matrix given as column -> (row ->
// value) maps; returns rank and the invariant factors. Unit pivots are
// eliminated sparsely; any remainder falls back to the dense routine.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Int>>> col;  // sorted by row index
};
struct DiagSNF {
  int rank = 0;
  std::vector<Int> diagonal;
};
DiagSNF smith_diagonal(const SparseMat& m);

// Canonical column-style Hermite basis of the column lattice: pivots walk
// down the rows, pivot entries positive, entries left of a pivot reduced to
// [0, pivot). Unique for the lattice, hence usable as a reference basis.
IntMat hermite_basis(const IntMat& m);

// Basis of the saturation span_Q(m) ∩ Z^n, in Hermite form.
IntMat saturation(const IntMat& m);

// Basis of {x : m x = 0} ∩ Z^cols, in Hermite form.
IntMat kernel_int(const IntMat& m);

// One integral solution of m x = b, if any.
std::optional<IntVec> solve_int(const IntMat& m, const IntVec& b);

// Rational solve m x = b; nullopt when inconsistent.
std::optional<RatVec> solve_rat(const RatMat& m, const RatVec& b);
std::optional<RatMat> solve_rat(const RatMat& m, const RatMat& b);

int rank_rat(const RatMat& m);

struct LatticeIndex {
  bool finite = false;
  Int value = 0;  // meaningful only when finite
};

// Index of the lattice generated by `sub`'s columns inside the lattice
// generated by `ambient`'s columns. Errors if sub is not contained in the
// rational span of ambient, or not contained in the ambient lattice itself.
LatticeIndex lattice_index(const IntMat& ambient, const IntMat& sub);

// All p-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int p);

// p-th compound matrix: entry (I,J) = det of the I×J minor, with p-subsets
// of rows/columns in lexicographic order. p = 0 gives the 1×1 identity.
IntMat compound(const IntMat& m, int p);

// Basis candidates for the p-th exterior power of the column lattice of
// `gens`: the p-fold wedges of all p-subsets of columns, expressed in the
// lexicographic wedge basis of ⋀^p Z^rows. Same as compound(gens, p).
IntMat wedge_basis(const IntMat& gens, int p);

}  // namespace trop
