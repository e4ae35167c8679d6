#pragma once

// Multivector framings over the cell complex. Each cell carries the subgroup
// of the p-th wedge power of its stratum lattice generated by the tangent
// planes of every cell in its closed star, pushed into the cell's own chart.
// Passing to a face composes with the chart transition; the induced maps are
// integral and compose strictly, so the framings form a cosheaf.

#include <map>
#include <vector>

#include "trop/polyhedral.hpp"

namespace trop {

class FramedComplex {
 public:
  FramedComplex(const TropicalComplex& x, int p);

  const TropicalComplex& space() const { return *x_; }
  int p() const { return p_; }

  // lattice basis of the framing group; columns live in the p-th wedge power
  // of the chart lattice, coordinates ordered by lex p-subsets
  const IntMat& framing(int cell) const {
    return framing_[static_cast<size_t>(cell)];
  }
  int rank(int cell) const {
    return static_cast<int>(framing_[static_cast<size_t>(cell)].cols());
  }

  // matrix of the map induced by passing from a cell to one of its faces,
  // written in the framing bases of the two cells
  IntMat face_map(int from, int to) const;

 private:
  const TropicalComplex* x_;
  int p_ = 0;
  std::vector<IntMat> framing_;
  mutable std::map<std::pair<int, int>, IntMat> map_cache_;
};

}  // namespace trop
