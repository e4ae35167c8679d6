#pragma once

// Compactified tropical hypersurfaces as finite cell complexes.
//
// The ambient is a smooth compactification of R^n described by a complete
// simplicial fan (projective space, or the normal fan of a lattice
// polytope). A cell of the variety is indexed by an ambient cone c (its
// sedentarity: the set of rays along which it sits at infinity) together
// with a positive-dimensional cell W of the dual subdivision; its dimension
// is n - |c| - dim W. Geometry is stored in the coordinates of the stratum
// chart, an integer quotient map P_c of rank n - |c|.

#include <map>
#include <vector>

#include "trop/troppoly.hpp"

namespace trop {

enum class AmbientKind { projective, toric };

struct Ambient {
  AmbientKind kind = AmbientKind::projective;
  int n = 0;
  std::vector<IntVec> rays;              // primitive generators, canonical order
  std::vector<std::vector<int>> cones;   // sorted ray-index sets, {} included
  bool has_cone(const std::vector<int>& c) const;
};

// Tropical projective n-space: rays (1,...,1), -e_1, ..., -e_n, every
// proper subset of at most n rays a cone.
Ambient projective_ambient(int n);

// Compactification with the normal fan of conv(vertices); rays are the
// primitive outer facet normals in lex order. The polytope must be simple.
Ambient polytope_ambient(const std::vector<IntVec>& vertices);

enum class Position { outside, boundary, interior };

struct Cell {
  std::vector<int> sed;   // sorted ambient ray indices (empty: finite stratum)
  std::vector<int> dual;  // support of the dual subdivision cell
  int dim = 0;

  RatMat vertices;  // chart coordinates, one column per vertex
  IntMat rays;      // primitive recession directions, one column each
  std::vector<int> ray_ids;  // ambient ray behind each recession column
  IntMat tangent;   // Hermite basis of the tangent lattice (reference orientation)

  std::vector<int> facets;       // cell ids of codimension-one faces
  std::vector<int> facet_signs;  // incidence numbers, aligned with facets

  // membership data: eq * x = eq_rhs cuts the affine hull, every inequality
  // row (w, w0) means <w, x> + w0 <= 0, tight only on proper faces
  RatMat eq;
  RatVec eq_rhs;
  std::vector<RatVec> ineq;
};

class TropicalComplex {
 public:
  TropicalComplex(Ambient ambient, TropicalPolynomial poly, Subdivision sub);

  const Ambient& ambient() const { return ambient_; }
  const TropicalPolynomial& poly() const { return poly_; }
  const Subdivision& subdivision() const { return sub_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int i) const { return cells_[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(cells_.size()); }
  int dim() const { return dim_; }  // dimension of the variety

  int chart_dim(const std::vector<int>& sed) const {
    return ambient_.n - static_cast<int>(sed.size());
  }
  // quotient map onto the stratum coordinates
  IntMat chart(const std::vector<int>& sed) const;
  IntMat chart_section(const std::vector<int>& sed) const;
  // chart change for sedentarity from ⊆ to
  IntMat transition(const std::vector<int>& from, const std::vector<int>& to) const;

  int index_of(const std::vector<int>& sed, const std::vector<int>& dual) const;
  std::vector<int> cells_of_dim(int d) const;
  std::vector<int> cells_with_sed(const std::vector<int>& sed) const;

  bool is_face(int a, int b) const;  // a is a face of b (possibly a == b)
  std::vector<int> closed_star(int tau) const;

  RatVec relint_point(int cell) const;
  Position position(int cell, const RatVec& y) const;  // y in the cell's chart
  int locate(const std::vector<int>& sed, const RatVec& y) const;  // -1 if absent

  // ambient ray matching a recession direction of the cell (-1 if none)
  int ray_of_direction(int cell, const IntVec& dir) const;

 private:
  friend TropicalComplex build_variety(const TropicalPolynomial& f, const Ambient& amb);

  Ambient ambient_;
  TropicalPolynomial poly_;
  Subdivision sub_;
  std::vector<Cell> cells_;
  int dim_ = 0;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
  mutable std::map<std::vector<int>, IntMat> chart_cache_;
  mutable std::map<std::vector<int>, IntMat> section_cache_;
};

TropicalComplex build_variety(const TropicalPolynomial& f, const Ambient& amb);

// Structural checks: distinct facets, geometric facet containment, boundary
// of boundary zero. Throws validation_error on failure.
void validate_cw(const TropicalComplex& x);

// Weight-one balancing around every codimension-one cell of each stratum.
void check_balancing(const TropicalComplex& x);

// Smallest face-closed set of cells containing `seed`.
std::vector<int> closure_cells(const TropicalComplex& x, const std::vector<int>& seed);

// primitive generator of the rank-one quotient of tangent lattices, oriented
// from tau into sigma (tau a codimension-one face of sigma, same stratum)
IntVec primitive_normal(const TropicalComplex& x, int sigma, int tau);

}  // namespace trop
