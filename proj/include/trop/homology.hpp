#pragma once

// Cellular chain complexes with framed coefficients and their homology.
// The degree-q chain group is the direct sum of the framing groups of the
// q-cells; the boundary assembles incidence numbers with the face maps.
// Restriction to any face-closed selection of cells gives the complex of a
// closed subspace carrying the ambient framing.

#include <vector>

#include "trop/cosheaf.hpp"
#include "trop/lattice.hpp"

namespace trop {

struct ChainComplex {
  std::vector<std::vector<int>> cells;    // cells[q]: contributing cell ids
  std::vector<std::vector<int>> offsets;  // block offset per cell, same shape
  std::vector<int> dims;                  // total rank of each chain group
  std::vector<SparseMat> boundary;        // boundary[q]: degree q -> q-1
};

ChainComplex chain_complex(const FramedComplex& f);
ChainComplex chain_complex(const FramedComplex& f, const std::vector<int>& keep);

struct HomologyGroup {
  int betti = 0;
  std::vector<Int> torsion;  // invariant factors greater than one
};

std::vector<HomologyGroup> homology(const ChainComplex& c);

// groups[p][q] over all framing powers p and degrees q up to the dimension
struct HodgeTable {
  std::vector<std::vector<HomologyGroup>> groups;
  bool has_torsion = false;
};
HodgeTable hodge_table(const TropicalComplex& x);
HodgeTable hodge_table(const TropicalComplex& x, const std::vector<int>& keep);

// For closed subcomplexes a, b covering the whole space: the long exact
// sequence of the cover forces the alternating sum of the four Betti
// sequences to vanish. Throws validation_error when it does not.
void check_cover_exactness(const FramedComplex& f, const std::vector<int>& a,
                           const std::vector<int>& b);

}  // namespace trop
