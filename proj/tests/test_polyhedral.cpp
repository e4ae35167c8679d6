#include <doctest.h>

#include "trop/polyhedral.hpp"

using namespace trop;

namespace {

TropicalPolynomial honeycomb_curve(int d) {
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d - a; ++b) {
      IntVec e(2);
      e << a, b;
      exps.push_back(e);
      coefs.push_back(Rat(-(a * a + b * b + a * b)));
    }
  return TropicalPolynomial(std::move(exps), std::move(coefs));
}

int count_dim(const TropicalComplex& x, int d) {
  return static_cast<int>(x.cells_of_dim(d).size());
}

int count_sed_size(const TropicalComplex& x, size_t k) {
  int n = 0;
  for (const auto& c : x.cells())
    if (c.sed.size() == k) ++n;
  return n;
}

}  // namespace

TEST_CASE("projective ambient") {
  Ambient a = projective_ambient(2);
  CHECK(a.rays.size() == 3);
  CHECK(a.cones.size() == 7);  // subsets of {0,1,2} of size at most 2
  CHECK(a.has_cone({}));
  CHECK(a.has_cone({0, 2}));
  CHECK(!a.has_cone({0, 1, 2}));
  Ambient b = projective_ambient(3);
  CHECK(b.cones.size() == 15);
}

TEST_CASE("polytope ambient from a prism-like polytope") {
  // conv{(0,0,0),(2,0,0),(0,2,0),(1,0,1),(0,1,1),(0,0,1)}: simple, 5 facets
  std::vector<IntVec> verts;
  auto add = [&](int a, int b, int c) {
    IntVec v(3);
    v << a, b, c;
    verts.push_back(v);
  };
  add(0, 0, 0);
  add(2, 0, 0);
  add(0, 2, 0);
  add(1, 0, 1);
  add(0, 1, 1);
  add(0, 0, 1);
  Ambient a = polytope_ambient(verts);
  CHECK(a.n == 3);
  CHECK(a.rays.size() == 5);
  // rays in lex order: facet outer normals
  CHECK(to_longs(a.rays[0]) == std::vector<long>{-1, 0, 0});
  CHECK(to_longs(a.rays[1]) == std::vector<long>{0, -1, 0});
  CHECK(to_longs(a.rays[2]) == std::vector<long>{0, 0, -1});
  CHECK(to_longs(a.rays[3]) == std::vector<long>{0, 0, 1});
  CHECK(to_longs(a.rays[4]) == std::vector<long>{1, 1, 1});
  // 1 + 5 + 9 + 6: empty, facets, edges, vertices
  CHECK(a.cones.size() == 21);
}

TEST_CASE("charts and transitions in the projective plane") {
  Ambient a = projective_ambient(2);
  auto f = honeycomb_curve(1);
  TropicalComplex x = build_variety(f, a);

  IntMat p0 = x.chart({});
  CHECK(is_zero(IntMat(p0 - IntMat::Identity(2, 2))));
  IntMat p1 = x.chart({1});
  REQUIRE(p1.rows() == 1);
  CHECK(p1(0, 0) == 0);
  CHECK(p1(0, 1) == 1);
  IntMat p01 = x.chart({0});  // rows e_i - e_j, j = 1
  REQUIRE(p01.rows() == 1);
  CHECK(p01(0, 0) == -1);
  CHECK(p01(0, 1) == 1);

  // transition composes with the section to the identity on the target
  IntMat q = x.transition({}, {1});
  CHECK(is_zero(IntMat(q - p1)));
  CHECK_THROWS_AS(x.transition({1}, {}), validation_error);
}

TEST_CASE("the line in the tropical projective plane") {
  TropicalComplex x = build_variety(honeycomb_curve(1), projective_ambient(2));
  CHECK(x.size() == 7);
  CHECK(x.dim() == 1);
  CHECK(count_dim(x, 0) == 4);  // center + three leaves
  CHECK(count_dim(x, 1) == 3);
  CHECK(count_sed_size(x, 0) == 4);
  CHECK(count_sed_size(x, 1) == 3);
  validate_cw(x);
  check_balancing(x);

  // every ray cell has exactly two facet points: the center and a leaf
  for (const auto& c : x.cells()) {
    if (c.dim != 1) continue;
    REQUIRE(c.facets.size() == 2);
    CHECK(c.facet_signs[0] * c.facet_signs[1] == -1);
  }
}

TEST_CASE("the honeycomb conic complex") {
  TropicalComplex x = build_variety(honeycomb_curve(2), projective_ambient(2));
  CHECK(x.size() == 19);
  CHECK(count_dim(x, 0) == 10);  // 4 finite vertices + 6 leaves
  CHECK(count_dim(x, 1) == 9);
  CHECK(count_sed_size(x, 1) == 6);
  validate_cw(x);
  check_balancing(x);

  // Euler characteristic of a rational curve
  CHECK(count_dim(x, 0) - count_dim(x, 1) == 1);
}

TEST_CASE("locate and position on the conic") {
  auto f = honeycomb_curve(2);
  TropicalComplex x = build_variety(f, projective_ambient(2));

  // vertices of the curve: argmax has three terms there
  for (int v : x.cells_of_dim(0)) {
    const Cell& c = x.cell(v);
    if (!c.sed.empty()) continue;
    REQUIRE(c.vertices.cols() == 1);
    CHECK(x.locate({}, RatVec(c.vertices.col(0))) == v);
    CHECK(f.argmax(RatVec(c.vertices.col(0))) == c.dual);
  }

  // relative interior points locate to their own cell
  for (int i = 0; i < x.size(); ++i)
    CHECK(x.locate(x.cell(i).sed, x.relint_point(i)) == i);

  // a point off the curve: deep in the third quadrant one monomial dominates
  RatVec off(2);
  off << Rat(-1000), Rat(-999);
  REQUIRE(f.argmax(off).size() == 1);
  CHECK(x.locate({}, off) == -1);
}

TEST_CASE("cubic curve: count, genus one cycle structure") {
  TropicalComplex x = build_variety(honeycomb_curve(3), projective_ambient(2));
  validate_cw(x);
  check_balancing(x);
  CHECK(count_dim(x, 0) == 9 + 9);   // top cells of the subdivision + 3d leaves
  CHECK(count_dim(x, 1) == 18);      // interior + boundary edges of the subdivision
  // chi = 0 for genus one
  CHECK(count_dim(x, 0) - count_dim(x, 1) == 0);
}

TEST_CASE("closed star and closure") {
  TropicalComplex x = build_variety(honeycomb_curve(2), projective_ambient(2));
  // star of a leaf point: itself plus its unique ray
  for (int i = 0; i < x.size(); ++i) {
    const Cell& c = x.cell(i);
    if (c.sed.size() != 1) continue;
    auto st = x.closed_star(i);
    CHECK(st.size() == 2);
  }
  // closure of a single ray contains its endpoints
  for (int i = 0; i < x.size(); ++i) {
    if (x.cell(i).dim != 1) continue;
    auto cl = closure_cells(x, {i});
    CHECK(cl.size() == 3);
    break;
  }
}

TEST_CASE("surface milestone: the plane in tropical projective three-space") {
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  auto add = [&](int a, int b, int c, int v) {
    IntVec e(3);
    e << a, b, c;
    exps.push_back(e);
    coefs.push_back(Rat(v));
  };
  add(0, 0, 0, 0);
  add(1, 0, 0, 0);
  add(0, 1, 0, 0);
  add(0, 0, 1, 0);
  TropicalComplex x = build_variety(TropicalPolynomial(exps, coefs),
                                    projective_ambient(3));
  validate_cw(x);
  check_balancing(x);
  CHECK(x.dim() == 2);
  // vertices: center, 4 ray leaves, 6 sed-two corners; edges: 4 rays plus
  // 12 boundary edges; six finite two-cells
  CHECK(count_dim(x, 0) == 1 + 4 + 6);
  CHECK(count_dim(x, 1) == 4 + 12);
  CHECK(count_dim(x, 2) == 6);
  CHECK(count_sed_size(x, 0) == 11);
  CHECK(count_sed_size(x, 1) == 16);
  CHECK(count_sed_size(x, 2) == 6);
  // chi of the compactified plane
  CHECK(count_dim(x, 0) - count_dim(x, 1) + count_dim(x, 2) == 1);
}
