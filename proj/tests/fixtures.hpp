#pragma once

// Standard examples shared by the test files.

#include "trop/polyhedral.hpp"

namespace fixtures {

// degree-d plane curve with concave quadratic coefficients; the induced
// subdivision is the unimodular honeycomb triangulation
inline trop::TropicalPolynomial honeycomb_curve(int d) {
  std::vector<trop::IntVec> exps;
  std::vector<trop::Rat> coefs;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d - a; ++b) {
      trop::IntVec e(2);
      e << a, b;
      exps.push_back(e);
      coefs.push_back(trop::Rat(-(a * a + b * b + a * b)));
    }
  return trop::TropicalPolynomial(std::move(exps), std::move(coefs));
}

inline trop::TropicalComplex curve(int d) {
  return trop::build_variety(honeycomb_curve(d), trop::projective_ambient(2));
}

// the tropical plane max(0, x, y, z)
inline trop::TropicalComplex plane() {
  std::vector<trop::IntVec> exps;
  std::vector<trop::Rat> coefs;
  for (int i = 0; i <= 3; ++i) {
    trop::IntVec e = trop::IntVec::Zero(3);
    if (i > 0) e(i - 1) = 1;
    exps.push_back(e);
    coefs.push_back(trop::Rat(0));
  }
  return trop::build_variety(trop::TropicalPolynomial(std::move(exps), std::move(coefs)),
                             trop::projective_ambient(3));
}

}  // namespace fixtures
