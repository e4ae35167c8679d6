#include "trop/floors.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "trop/homology.hpp"
#include "trop/polyhedral.hpp"
#include "trop/troppoly.hpp"

using namespace trop;

namespace {

TropicalComplex curve_complex(int d, unsigned seed) {
  return build_variety(synth_curve(d, seed), projective_ambient(2));
}

}  // namespace

TEST_CASE("synthesized plans have the expected crossing counts") {
  FloorPlan p2 = synth_plan(2, 7);
  REQUIRE(p2.crossings.size() == 1);
  CHECK(p2.crossings[0].size() == 2);

  FloorPlan p3 = synth_plan(3, 7);
  REQUIRE(p3.crossings.size() == 2);
  CHECK(p3.crossings[0].size() == 2);
  CHECK(p3.crossings[1].size() == 6);
  for (const Crossing& c : p3.crossings[1]) {
    CHECK(p3.complexes[1].cell(c.low_edge).dim == 1);
    CHECK(p3.complexes[2].cell(c.high_edge).dim == 1);
  }
}

TEST_CASE("floor decomposition recognizes stacked surfaces") {
  CHECK(is_floor_decomposed(parse_poly("0+0(1,0,0)+0(0,1,0)+0(0,0,1)", 3)));
  CHECK(is_floor_decomposed(synth_surface(2, 3)));

  // all-zero heights on the full degree-two support leave one giant cell
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b)
      for (int c = 0; a + b + c <= 2; ++c) {
        IntVec e(3);
        e << a, b, c;
        exps.push_back(e);
        coefs.push_back(Rat(0));
      }
  CHECK_FALSE(is_floor_decomposed(TropicalPolynomial(std::move(exps), std::move(coefs))));

  CHECK_THROWS_AS(is_floor_decomposed(parse_poly("0+0(1,0)", 2)), input_error);
}

TEST_CASE("degenerate height choices are rejected") {
  FloorPlan plan = synth_plan(2, 5);
  std::vector<Rat> flat = {Rat(0), Rat(0), Rat(0)};
  CHECK_THROWS_AS(surface_from_floor_plan(plan, flat), input_error);
  std::vector<Rat> upside_down = {Rat(0), Rat(1), Rat(2)};
  CHECK_THROWS_AS(surface_from_floor_plan(plan, upside_down), input_error);
}

TEST_CASE("surface tables for small degrees") {
  TropicalPolynomial f2 = synth_surface(2, 1);
  TropicalComplex x2 = build_variety(f2, projective_ambient(3));
  HodgeTable t2 = hodge_table(x2);
  CHECK_FALSE(t2.has_torsion);
  REQUIRE(t2.groups.size() == 3);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      int expected = p == q ? (p == 1 ? 2 : 1) : 0;
      CHECK(t2.groups[static_cast<size_t>(p)][static_cast<size_t>(q)].betti == expected);
    }

  TropicalPolynomial f3 = synth_surface(3, 1);
  TropicalComplex x3 = build_variety(f3, projective_ambient(3));
  HodgeTable t3 = hodge_table(x3);
  CHECK_FALSE(t3.has_torsion);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      int expected = p == q ? (p == 1 ? 7 : 1) : 0;
      CHECK(t3.groups[static_cast<size_t>(p)][static_cast<size_t>(q)].betti == expected);
    }
}

TEST_CASE("floors are counted") {
  CHECK(floor_components(fixtures::plane()) == 1);
  TropicalComplex x2 = build_variety(synth_surface(2, 1), projective_ambient(3));
  CHECK(floor_components(x2) == 2);
  TropicalComplex x3 = build_variety(synth_surface(3, 1), projective_ambient(3));
  CHECK(floor_components(x3) == 3);
}

TEST_CASE("level structure of a stacked quadric") {
  TropicalPolynomial f = synth_surface(2, 9);
  FloorPlan plan = floor_plan(f);
  TropicalComplex x = build_variety(f, projective_ambient(3));
  FloorDecomposition fd = floor_decomposition(x, plan);

  CHECK(fd.wall_facets[1].size() == 3);
  CHECK(fd.wall_facets[2].size() == 9);
  CHECK(fd.wall_edges[1].size() == 1);
  CHECK(fd.wall_edges[2].size() == 4);
  CHECK(fd.floor_facets[0].size() == 3);
  CHECK(fd.floor_facets[1].size() == 10);
  CHECK(fd.top_rim_edges[1].size() == 3);
  CHECK(fd.top_rim_edges[2].size() == 11);
  CHECK(fd.bottom_rim_edges[1].size() == 5);
  CHECK(fd.bottom_rim_edges[2].size() == 0);
  REQUIRE(fd.lifted_crossings.size() == 1);
  REQUIRE(fd.lifted_crossings[0].size() == 2);
  for (int v : fd.lifted_crossings[0]) CHECK(x.cell(v).dim == 0);
}

TEST_CASE("breaking points follow the genus") {
  int expected[] = {0, 0, 0, 1, 3};
  for (int d = 1; d <= 4; ++d) {
    TropicalComplex c = curve_complex(d, 2);
    CurveSkeleton s = curve_breaking_points(c);
    CHECK(s.genus == expected[d]);
    CHECK(static_cast<int>(s.points.size()) == expected[d]);
    for (const BreakingPoint& bp : s.points) {
      REQUIRE(bp.loop_edges.size() == bp.loop_signs.size());
      REQUIRE(bp.loop_edges[0] == bp.edge);
      // the signed edges chain into a closed walk
      RatVec at = RatVec(c.cell(bp.edge).vertices.col(0));
      RatVec start = at;
      for (size_t i = 0; i < bp.loop_edges.size(); ++i) {
        const Cell& e = c.cell(bp.loop_edges[i]);
        int from = bp.loop_signs[i] == 1 ? 0 : 1;
        for (int k = 0; k < 2; ++k) REQUIRE(e.vertices(k, from) == at(k));
        at = RatVec(e.vertices.col(1 - from));
      }
      for (int k = 0; k < 2; ++k) CHECK(at(k) == start(k));
    }
  }
}

TEST_CASE("breaking points avoid marked locations") {
  TropicalComplex c = curve_complex(3, 2);
  CurveSkeleton plain = curve_breaking_points(c);
  REQUIRE(plain.points.size() == 1);
  std::vector<RatVec> avoid = {plain.points[0].point};
  CurveSkeleton moved = curve_breaking_points(c, avoid);
  REQUIRE(moved.points.size() == 1);
  CHECK(moved.points[0].edge == plain.points[0].edge);
  bool shifted = false;
  for (int k = 0; k < 2; ++k)
    if (moved.points[0].point(k) != plain.points[0].point(k)) shifted = true;
  CHECK(shifted);
}

TEST_CASE("graph modification of consecutive curves") {
  TropicalComplex x = graph_modification(synth_curve(2, 4), synth_curve(1, 4));
  REQUIRE(x.ambient().rays.size() == 5);
  for (int r = 0; r < 5; ++r) {
    int found = 0;
    for (int i = 0; i < x.size(); ++i)
      if (x.cell(i).sed == std::vector<int>{r}) ++found;
    CHECK(found > 0);
  }
  HodgeTable t = hodge_table(x);
  CHECK(t.groups[0][0].betti == 1);
  CHECK(t.groups[1][1].betti == 3);
  CHECK(t.groups[1][2].betti == 0);
  CHECK_FALSE(t.has_torsion);
}
