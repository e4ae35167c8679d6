#pragma once

// Floor decomposed surfaces in tropical projective 3-space: a degree-d
// surface splits into d+1 horizontal floors joined by vertical walls over a
// stack of plane curves C_1..C_d when every horizontal slice of the dual
// subdivision tiles its triangle with primitive cells. This module analyses
// and synthesizes such surfaces and classifies their cells for the cycle
// constructions.

#include <vector>

#include "trop/polyhedral.hpp"

namespace trop {

struct Crossing {
  RatVec point;        // in the plane
  int low_edge = -1;   // 1-cell id in the lower-degree curve complex
  int high_edge = -1;  // 1-cell id in the higher-degree curve complex
};

struct FloorPlan {
  int degree = 0;
  std::vector<TropicalPolynomial> curves;        // degree k at index k-1
  std::vector<TropicalComplex> complexes;        // compactified curves
  std::vector<std::vector<Crossing>> crossings;  // [k-1]: C_k meets C_{k+1}
};

// Exact intersection points of the one-skeleta of two plane curves, sorted
// lexicographically. Throws input_error unless every meeting is transversal,
// interior to an edge of both curves, and unimodular (the primitive edge
// directions span the lattice).
std::vector<Crossing> curve_crossings(const TropicalComplex& low,
                                      const TropicalComplex& high);

// True when the subdivision is primitive and, for every k, its cells at
// height d-k tile the size-k triangle with primitive two-dimensional cells.
bool is_floor_decomposed(const TropicalPolynomial& f);

FloorPlan floor_plan(const TropicalPolynomial& f);
FloorPlan plan_from_curves(std::vector<TropicalPolynomial> curves);

// max over i of (d-i)*x3 + b_i + f_i with f_0 = 0. Heights b_0..b_d are
// either supplied (and verified) or chosen by the wall-height scheduler so
// the result is floor decomposed.
TropicalPolynomial surface_from_floor_plan(const FloorPlan& plan);
TropicalPolynomial surface_from_floor_plan(const FloorPlan& plan,
                                           const std::vector<Rat>& heights);

// Closure of the graph of top - bottom over the plane, compactified in the
// normal fan of its Newton polytope (top of degree d, bottom of degree d-1).
TropicalComplex graph_modification(const TropicalPolynomial& top,
                                   const TropicalPolynomial& bottom);

struct BreakingPoint {
  int edge = -1;  // host edge in the curve complex
  RatVec point;
  IntVec framing;               // primitive direction along the edge
  std::vector<int> loop_edges;  // the restored embedded loop, in order
  std::vector<int> loop_signs;  // +1: traversed from stored endpoint 0 to 1
};

struct CurveSkeleton {
  int genus = 0;
  std::vector<int> tree_edges;
  std::vector<BreakingPoint> points;
};

// Genus-many points in open bounded edges whose removal leaves a spanning
// tree of the finite part, each with the loop its edge closes. `avoid`
// lists marked points the breaking points must not collide with.
CurveSkeleton curve_breaking_points(const TropicalComplex& curve,
                                    const std::vector<RatVec>& avoid = {});

// Cell classification of a floor decomposed surface. Wall j stands over the
// curve C_j; floor i lies between C_i and C_{i+1} (floor 0 is the top).
struct FloorDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> wall_facets;       // [j], j = 1..d
  std::vector<std::vector<int>> wall_edges;        // vertical edges of wall j
  std::vector<std::vector<int>> top_rim_edges;     // junction with the floor above
  std::vector<std::vector<int>> bottom_rim_edges;  // junction with the floor below
  std::vector<std::vector<int>> floor_facets;      // [i], i = 0..d-1
  std::vector<std::vector<int>> lifted_crossings;  // [k-1][s]: vertex over crossings[k-1][s]
};

FloorDecomposition floor_decomposition(const TropicalComplex& x, const FloorPlan& plan);

// Connected components left after removing every vertical cell and the
// bottom boundary; one per floor.
int floor_components(const TropicalComplex& x);

// Deterministic generic curves: honeycomb coefficients translated by a
// seed-indexed offset. The k-th curve depends only on (seed, k), so plans
// are nested across degrees.
TropicalPolynomial synth_curve(int degree, unsigned seed);
FloorPlan synth_plan(int degree, unsigned seed);
TropicalPolynomial synth_surface(int degree, unsigned seed);

}  // namespace trop
