#pragma once

// Framed one-chains drawn on a tropical surface and their exact pairing.
// A chain is a list of oriented rational segments or rays, each resident in
// one open cell of the complex and decorated with an integer weight and a
// framing vector from that cell's degree-one framing group. Boundary
// residues are accumulated pointwise, with chart transitions applied at the
// ends that recede to boundary strata; a chain is closed when every residue
// vanishes. Two closed chains in transversal position pair by a determinant
// rule inside the facet hosting each meeting point.

#include <optional>
#include <string>
#include <vector>

#include "trop/cosheaf.hpp"
#include "trop/polyhedral.hpp"

namespace trop {

struct ChainPiece {
  int host = -1;       // open cell containing the relative interior
  RatVec a, b;         // endpoints in the host chart; b ignored for rays
  IntVec dir;          // recession direction of an unbounded piece
  bool bounded = true;
  int limit = -1;      // boundary cell receiving the unbounded end
  Int weight = 1;
  IntVec framing;      // in the chart of the host's stratum
};

struct FramedChain {
  int p = 1, q = 1;
  std::vector<ChainPiece> pieces;
};

// Reverses orientation by negating every weight.
FramedChain reversed(FramedChain c);

// Balanced weighted one-cycles in a single chart, before framing.
struct WeightedEdge {
  RatVec a, b;
  IntVec dir;
  bool bounded = true;
  Int weight = 1;
};

struct Weighted1Cycle {
  std::vector<WeightedEdge> edges;
};

// Weighted primitive directions sum to zero at every finite endpoint.
bool check_balanced(const Weighted1Cycle& c);

// The parallel framed chain of a balanced cycle supported on the finite
// part of x: every edge is framed by its own oriented primitive direction.
// Hosts and boundary limits are located on x; throws input_error when the
// support leaves the variety and validation_error when c is not balanced.
FramedChain cyc(const Weighted1Cycle& c, const TropicalComplex& x);

// Boundary cell at infinity receiving a ray from the open cell `host` with
// direction `dir`: the face of the host in the stratum of the minimal fan
// cone containing the direction in its relative interior.
int ray_limit(const TropicalComplex& x, int host, const IntVec& dir);

// True when every boundary residue of the chain vanishes. Validates the
// chain invariants (interiors inside single open cells, framings inside the
// framing groups) and throws input_error on violation.
bool is_cycle(const FramedChain& c, const FramedComplex& f1);
bool is_cycle(const FramedChain& c, const TropicalComplex& x);

// Sum of local multiplicities over the meeting points of the two supports.
// Every meeting must be a single point interior to one piece of each chain
// and interior to a common sedentarity-free facet; otherwise throws
// validation_error. The local multiplicity at a meeting is
//   w_a * w_b * sign(det(u_a, u_b)) * det(phi_a, phi_b)
// in an oriented lattice basis of the facet. Isolated meetings that violate
// the facet-interior requirement are tolerated when the two framings are
// linearly dependent: every transversal perturbation then pairs to zero, so
// the meeting is skipped. Overlaps of positive length always throw.
// `local`, when given, receives the nonzero local multiplicities in
// discovery order.
Int transversal_intersection(const FramedChain& a, const FramedChain& b,
                             const TropicalComplex& x,
                             std::vector<Int>* local = nullptr);

// Around every finite codimension-one cell, the primitive outward
// directions of the adjacent finite top cells sum to zero in the quotient
// by the cell's tangent lattice. Throws validation_error with the offending
// cell otherwise.
void check_hypersurface_balancing(const TropicalComplex& x);

// A symmetric pairing on labelled generators, possibly with unknown
// entries. `block` tags each generator: 'A' floor loops, 'C' curve loops,
// 'B' their dual cycles, 'V' the vertical cycle, 'E' fibers, 'L' the lifted
// line. `assumptions` lists the inputs taken on faith rather than computed.
struct IntersectionForm {
  std::vector<std::string> labels;
  std::vector<char> block;
  std::vector<std::vector<std::optional<Int>>> entries;
  std::vector<std::string> assumptions;
};

struct Signature {
  int pos = 0, neg = 0, null = 0;
  std::vector<std::string> assumptions;
  int index() const { return pos - neg; }
};

// Exact signature by rational congruence. Fully known forms are
// diagonalized directly. Unknown entries are only admitted in the pattern
// produced by assemble_form -- rows of every 'C' generator fully known,
// zero apart from a unit pairing with its
// matching 'B' generator -- where splitting off the hyperbolic pairs
// leaves the 'A' block plus the asserted vertical square.
Signature form_signature(const IntersectionForm& q);

}  // namespace trop
