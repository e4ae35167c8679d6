#pragma once

// Distinguished framed (1,1)-cycles on a floor decomposed surface and the
// intersection form they span. Floor cycles run along the two rims of a
// floor between consecutive lifted crossings; curve cycles lift the loops
// of a wall curve to the lower rim of its wall; their dual cycles cross the
// wall once at a breaking point; a single vertical cycle descends through
// every wall. Push-off copies at mid-wall height make the pairings against
// the vertical cycle computable by transversal intersection.

#include <map>
#include <string>
#include <vector>

#include "trop/floors.hpp"
#include "trop/homology.hpp"
#include "trop/intersect.hpp"

namespace trop {

struct SurfaceCycles {
  std::vector<FramedChain> floor_cycles;   // rim loops, floors in ascending order
  std::vector<FramedChain> floor_pairing;  // mid-wall push-offs of the rim loops
  std::vector<int> floor_of;               // floor index of each rim loop
  std::vector<FramedChain> curve_cycles;   // curve loops on the lower rim of their wall
  std::vector<FramedChain> curve_pairing;  // the same loops at mid-wall height
  std::vector<FramedChain> break_cycles;   // duals crossing the wall at a breaking point
  std::vector<int> curve_of;               // wall index of each curve loop
  FramedChain vertical;                    // descends every wall, closed by boundary rays
};

// Builds the full cycle inventory; f is the surface polynomial the complex
// was built from. Breaking duals are normalized so each pairs +1 with its
// own curve loop. Throws validation_error when a construction degenerates.
SurfaceCycles basis_cycles(const TropicalComplex& x, const TropicalPolynomial& f,
                           const FloorPlan& plan, const FloorDecomposition& fd);

// Fibers over the crossings of a consecutive curve pair on the graph
// modification of top - bottom, with bent push-offs crossing each fiber
// once, and optionally a lifted line with a parallel translate.
struct GraphPairCycles {
  std::vector<FramedChain> fibers;
  std::vector<FramedChain> bent_fibers;
  FramedChain line, line_copy;
  std::vector<RatVec> crossings;  // plane crossing points, lexicographic
};

GraphPairCycles graph_pair_cycles(const TropicalComplex& y,
                                  const TropicalPolynomial& top,
                                  const TropicalPolynomial& bottom,
                                  bool with_line = true);

// The parallel cycle tracing the tropical line with apex (-a, -b) on the
// graph modification of the pair: the plane line is lifted to the graph of
// the height difference, with a vertical detour patching the slope jump at
// each wall crossing. Throws validation_error when the line is not in
// generic position (it must cross both curves transversally, away from
// their common crossings and from each other's crossing points).
FramedChain lifted_line(const TropicalComplex& y, const TropicalPolynomial& top,
                        const TropicalPolynomial& bottom, const Rat& a,
                        const Rat& b);

// Fiber pairings and, when present, the line row; every entry computed by
// transversal intersection against a push-off representative.
IntersectionForm graph_pair_form(const TropicalComplex& y, const GraphPairCycles& gc);

// The full pairing on the cycle inventory. Floor-against-floor entries on a
// common floor expand bilinearly through the fiber pairings of that floor's
// graph modification; entries against the vertical cycle use the push-off
// copies; pairings among the breaking duals and against the vertical cycle
// are left unknown. The vertical self-pairing is the one asserted input.
IntersectionForm assemble_form(const TropicalComplex& x, const FloorPlan& plan,
                               const FloorDecomposition& fd, const SurfaceCycles& cy);

// ids of all faces of the given cells, the cells included, sorted
std::vector<int> face_closure(const TropicalComplex& x, const std::vector<int>& cells);

struct SurfaceCheck {
  std::string name;
  std::string expected, got;
  bool pass = false;
};

struct SurfaceReport {
  int degree = 0;
  std::vector<SurfaceCheck> checks;
  std::vector<std::string> assumptions;
  bool pass = true;
};

// Memoizing driver: synthesizes the degree-d surface and the graph
// modification of its top curve pair, builds cycles and forms, and checks
// the computed invariants against the closed-form counts.
class SurfaceVerifier {
 public:
  explicit SurfaceVerifier(unsigned seed = 7);

  struct Data {
    FloorPlan plan;
    TropicalPolynomial poly;
    TropicalComplex x;
    FloorDecomposition fd;
    SurfaceCycles cycles;
    IntersectionForm form;
    Signature sig;
  };
  struct PairData {
    TropicalComplex y;
    GraphPairCycles cycles;
    IntersectionForm form;
    Signature sig;
  };

  const Data& surface(int degree);
  const PairData& pair(int degree);  // degree >= 2: curves degree, degree - 1
  const HodgeTable& surface_hodge(int degree);
  const HodgeTable& pair_hodge(int degree);
  SurfaceReport report(int degree);

 private:
  unsigned seed_;
  std::map<int, Data> data_;
  std::map<int, PairData> pairs_;
  std::map<int, HodgeTable> hodge_;
  std::map<int, HodgeTable> pair_hodge_;
};

}  // namespace trop
