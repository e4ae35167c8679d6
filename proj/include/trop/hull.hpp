#pragma once

// Exact convex geometry on small point sets: facet/face enumeration,
// pulling triangulations, lattice-normalized volumes, and regular
// subdivisions induced by lifting heights.

#include <vector>

#include "trop/lattice.hpp"
#include "trop/numeric.hpp"

namespace trop {

int affine_dim(const std::vector<RatVec>& pts);

struct AffineFacet {
  std::vector<int> support;  // sorted indices of points on the facet
  RatVec normal;             // <normal, p> <= offset for all points, tight on support
  Rat offset;
};

// Facets of conv(pts) relative to its affine hull. Normals are primitive
// integer vectors (up to the ambiguity of extending off the hull when the
// configuration is not full-dimensional).
std::vector<AffineFacet> polytope_facets(const std::vector<RatVec>& pts);

// Every nonempty face of conv(pts) as a sorted support, the polytope
// itself included, ordered by (size, lex).
std::vector<std::vector<int>> polytope_faces(const std::vector<RatVec>& pts);

std::vector<int> polytope_vertices(const std::vector<RatVec>& pts);

// Triangulation obtained by pulling the lex-least vertex; simplices have
// affdim+1 members each. Non-vertex points are not used.
std::vector<std::vector<int>> pulling_triangulation(const std::vector<RatVec>& pts);

// Volume of conv(pts) normalized to the saturated lattice of differences
// (a primitive simplex has volume 1, in any dimension).
Int normalized_volume(const std::vector<IntVec>& pts);

struct ConeFacet {
  std::vector<int> support;  // generators lying on the facet
  RatVec normal;             // <normal, g> <= 0 for all generators
};

// Facets of the cone spanned by the columns of gens (assumed pointed).
std::vector<ConeFacet> cone_facets(const RatMat& gens);

struct HullCell {
  std::vector<int> support;  // sorted indices of lifted points on the facet
  RatVec linear;             // supporting functional l(a) = <linear, a> + offset
  Rat offset;                // satisfies l >= heights, tight exactly on support
};

// Regular subdivision induced by the upper hull of the lift
// (pts[i], heights[i]): one entry per top-dimensional cell.
std::vector<HullCell> upper_hull(const std::vector<IntVec>& pts,
                                 const std::vector<Rat>& heights);

inline std::vector<RatVec> to_rat_pts(const std::vector<IntVec>& pts) {
  std::vector<RatVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_rat(p));
  return out;
}

}  // namespace trop
