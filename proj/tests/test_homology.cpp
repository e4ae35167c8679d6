#include <doctest.h>

#include "trop/homology.hpp"

#include "fixtures.hpp"

using namespace trop;

TEST_CASE("curve tables match the genus") {
  // degree d plane curve: genus (d-1)(d-2)/2
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    int g = (d - 1) * (d - 2) / 2;
    HodgeTable t = hodge_table(fixtures::curve(d));
    CHECK(!t.has_torsion);
    CHECK(t.groups[0][0].betti == 1);
    CHECK(t.groups[0][1].betti == g);
    CHECK(t.groups[1][0].betti == g);
    CHECK(t.groups[1][1].betti == 1);
  }
}

TEST_CASE("plane has the diagonal table") {
  HodgeTable t = hodge_table(fixtures::plane());
  CHECK(!t.has_torsion);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      CHECK(t.groups[p][q].betti == (p == q ? 1 : 0));
}

TEST_CASE("torsion is reported") {
  // multiplication by two on a single generator
  ChainComplex cc;
  cc.dims = {1, 1};
  cc.cells = {{0}, {1}};
  cc.offsets = {{0}, {0}};
  cc.boundary.resize(2);
  cc.boundary[0] = {0, 1, {{}}};
  cc.boundary[1] = {1, 1, {{{0, Int(2)}}}};
  auto h = homology(cc);
  CHECK(h[0].betti == 0);
  REQUIRE(h[0].torsion.size() == 1);
  CHECK(h[0].torsion[0] == 2);
  CHECK(h[1].betti == 0);
}

TEST_CASE("a single closed facet is contractible") {
  TropicalComplex x = fixtures::plane();
  int facet = x.cells_of_dim(2).front();
  std::vector<int> keep = closure_cells(x, {facet});
  CHECK(keep.size() == 9);  // a quadrilateral: 4 corners, 4 sides, 1 face
  FramedComplex f(x, 0);
  auto h = homology(chain_complex(f, keep));
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 0);
  CHECK(h[2].betti == 0);
}

TEST_CASE("two-part covers satisfy the rank identity") {
  TropicalComplex x = fixtures::plane();
  std::vector<int> facets = x.cells_of_dim(2);
  std::vector<int> a = closure_cells(x, {facets[0], facets[1], facets[2]});
  std::vector<int> b = closure_cells(x, {facets[3], facets[4], facets[5]});
  for (int p = 0; p <= 2; ++p) {
    CAPTURE(p);
    FramedComplex f(x, p);
    CHECK_NOTHROW(check_cover_exactness(f, a, b));
  }
}

TEST_CASE("subcomplex selections must be closed") {
  TropicalComplex x = fixtures::curve(1);
  FramedComplex f(x, 0);
  std::vector<int> open = {x.cells_of_dim(1).front()};  // an edge without its ends
  CHECK_THROWS_AS(chain_complex(f, open), input_error);
}
