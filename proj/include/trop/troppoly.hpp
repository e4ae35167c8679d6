#pragma once

// Max-plus tropical polynomials and their dual subdivisions.

#include <map>
#include <string>
#include <vector>

#include "trop/hull.hpp"
#include "trop/numeric.hpp"

namespace trop {

// f(x) = max over terms of (coefficient + <exponent, x>). Terms are kept
// sorted lexicographically by exponent.
class TropicalPolynomial {
 public:
  TropicalPolynomial(std::vector<IntVec> exponents, std::vector<Rat> coefficients);

  int vars() const { return static_cast<int>(exps_.empty() ? 0 : exps_[0].size()); }
  int terms() const { return static_cast<int>(exps_.size()); }
  int degree() const;  // maximal total degree of a term

  const std::vector<IntVec>& exponents() const { return exps_; }
  const std::vector<Rat>& coefficients() const { return coefs_; }

  Rat evaluate(const RatVec& x) const;
  std::vector<int> argmax(const RatVec& x) const;  // indices of maximizing terms

  std::string to_string() const;

 private:
  std::vector<IntVec> exps_;
  std::vector<Rat> coefs_;
};

// Format: terms joined by '+', each "coef" or "coef(e1,...,en)", with
// rational coefficients "p" or "p/q". A missing exponent list means the
// constant term. If max_degree >= 0, every term must satisfy
// sum(exponent) <= max_degree.
TropicalPolynomial parse_poly(const std::string& s, int vars, int max_degree = -1);

struct DualCell {
  std::vector<int> support;  // indices into Subdivision::points, sorted
  int dim = 0;
  std::vector<int> faces;  // codimension-one faces, as indices into cells
  RatVec vertex;           // dual vertex of the variety (top cells only; else size 0)
};

// Polyhedral complex dual to a tropical polynomial: the regular subdivision
// of its support induced by the coefficient lift, closed under faces.
struct Subdivision {
  std::vector<IntVec> points;   // the support exponents
  std::vector<DualCell> cells;  // sorted by (dim, support)
  int top_dim = 0;

  int index_of(const std::vector<int>& support) const;
  std::vector<int> top_cells() const;
  std::vector<RatVec> cell_points(int cell) const;

 private:
  friend Subdivision dual_subdivision(const TropicalPolynomial& f);
  std::map<std::vector<int>, int> lookup_;
};

Subdivision dual_subdivision(const TropicalPolynomial& f);

struct PrimitivityReport {
  bool primitive = false;
  int offending_cell = -1;  // index into cells when not primitive
};

// A subdivision is primitive when every top cell is a unimodular simplex.
PrimitivityReport is_primitive(const Subdivision& s);

// Terms whose exponent has last coordinate equal to `level`, with that
// coordinate dropped.
TropicalPolynomial restrict_to_level(const TropicalPolynomial& f, int level);

}  // namespace trop
