#pragma once

// File formats and the command line front end. Polynomials and floor plans
// round-trip through JSON documents
//   {"dim": n, "degree": d, "terms": [{"e": [..], "c": "p/q"}]}
//   {"curves": [poly, ...], "heights": ["p/q", ...]}   (heights optional)
// with every rational kept as an exact string. Writers emit keys in sorted
// order with a fixed layout, so equal inputs produce byte-identical files.

#include <string>
#include <vector>

#include "trop/cycles.hpp"

namespace trop {

std::string poly_to_json(const TropicalPolynomial& f);
TropicalPolynomial poly_from_json(const std::string& text);

struct PlanDoc {
  std::vector<TropicalPolynomial> curves;  // degree k at index k-1
  std::vector<Rat> heights;                // empty: wall heights are scheduled
};

std::string plan_to_json(const PlanDoc& doc);
PlanDoc plan_from_json(const std::string& text);

// Accepts either document kind; a floor plan is assembled into its surface.
TropicalPolynomial surface_from_document(const std::string& text);

// Wavefront OBJ of the sedentarity-free two-skeleton: every facet clipped
// to [-box, box]^3, fan-triangulated, one group per facet. Coordinates are
// printed as decimals truncated after twelve fractional digits.
std::string surface_obj(const TropicalComplex& x, const Rat& box);

// Named framed chains as OBJ polyline groups, clipped to the same box.
std::string cycles_obj(const std::vector<std::string>& names,
                       const std::vector<FramedChain>& chains, const Rat& box);

int run_cli(int argc, char** argv);

}  // namespace trop
