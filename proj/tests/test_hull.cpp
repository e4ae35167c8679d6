#include <doctest.h>

#include <random>

#include "trop/hull.hpp"

using namespace trop;

namespace {

IntVec iv(std::initializer_list<int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

RatVec rv(std::initializer_list<int> xs) { return to_rat(iv(xs)); }

// lattice points of the dilated standard triangle d*conv{0,e1,e2}
std::vector<IntVec> triangle_points(int d) {
  std::vector<IntVec> pts;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d - a; ++b) pts.push_back(iv({a, b}));
  return pts;
}

bool polytope_contains(const std::vector<RatVec>& pts, const RatVec& p) {
  // affine hull membership
  RatMat d(p.size(), static_cast<int>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i) d.col(static_cast<int>(i)) = pts[i] - pts[0];
  if (!is_zero(RatVec(p - pts[0]))) {
    Eigen::FullPivLU<RatMat> lu(d);
    RatVec x = lu.solve(RatVec(p - pts[0]));
    if (!is_zero(RatVec(d * x - (p - pts[0])))) return false;
  }
  for (const auto& f : polytope_facets(pts))
    if (f.normal.dot(p) > f.offset) return false;
  return true;
}

}  // namespace

TEST_CASE("facets of simple polytopes") {
  // unit square
  std::vector<RatVec> sq = {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
  auto fs = polytope_facets(sq);
  CHECK(fs.size() == 4);
  for (const auto& f : fs) CHECK(f.support.size() == 2);

  // segment with an interior point: only the endpoints are facets
  std::vector<RatVec> seg = {rv({0, 0}), rv({1, 1}), rv({2, 2})};
  auto fseg = polytope_facets(seg);
  REQUIRE(fseg.size() == 2);
  CHECK(fseg[0].support == std::vector<int>{0});
  CHECK(fseg[1].support == std::vector<int>{2});

  // cube
  std::vector<RatVec> cube;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube.push_back(rv({x, y, z}));
  CHECK(polytope_facets(cube).size() == 6);
  CHECK(polytope_faces(cube).size() == 8 + 12 + 6 + 1);
  CHECK(polytope_vertices(cube).size() == 8);
}

TEST_CASE("pulling triangulation and normalized volume") {
  std::vector<IntVec> cube;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube.push_back(iv({x, y, z}));
  CHECK(pulling_triangulation(to_rat_pts(cube)).size() == 6);
  CHECK(normalized_volume(cube) == 6);

  CHECK(normalized_volume({iv({0, 0}), iv({1, 0}), iv({0, 1})}) == 1);
  CHECK(normalized_volume({iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({1, 1}), iv({1, 0}),
                           iv({0, 1})}) == 4);
  // lower-dimensional: primitive segment has volume 1, doubled segment 2
  CHECK(normalized_volume({iv({0, 0, 0}), iv({1, 1, 0})}) == 1);
  CHECK(normalized_volume({iv({0, 0, 0}), iv({2, 2, 0})}) == 2);
  CHECK(normalized_volume({iv({3, 5})}) == 1);
}

TEST_CASE("cone facets") {
  RatMat quadrant(2, 2);
  quadrant << 1, 0, 0, 1;
  auto fs = cone_facets(quadrant);
  REQUIRE(fs.size() == 2);
  for (const auto& f : fs) {
    REQUIRE(f.support.size() == 1);
    for (int j = 0; j < 2; ++j) CHECK(f.normal.dot(quadrant.col(j)) <= 0);
    CHECK(f.normal.dot(quadrant.col(f.support[0])) == 0);
  }

  // single ray: one facet at the origin, no generators on it
  RatMat ray(2, 1);
  ray << 1, 2;
  auto fr = cone_facets(ray);
  REQUIRE(fr.size() == 1);
  CHECK(fr[0].support.empty());
  CHECK(fr[0].normal.dot(ray.col(0)) < 0);

  // three-dimensional orthant
  RatMat orth = RatMat::Identity(3, 3);
  CHECK(cone_facets(orth).size() == 3);
}

TEST_CASE("upper hull: one-dimensional lifts") {
  std::vector<IntVec> pts = {iv({0}), iv({1}), iv({2})};
  auto flat = upper_hull(pts, {Rat(0), Rat(0), Rat(0)});
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].support == std::vector<int>{0, 1, 2});

  auto peak = upper_hull(pts, {Rat(0), Rat(1), Rat(0)});
  REQUIRE(peak.size() == 2);
  CHECK(peak[0].support == std::vector<int>{0, 1});
  CHECK(peak[1].support == std::vector<int>{1, 2});

  auto dip = upper_hull(pts, {Rat(0), Rat(-5), Rat(0)});
  REQUIRE(dip.size() == 1);
  CHECK(dip[0].support == std::vector<int>{0, 2});

  // supporting functional really supports: l >= h with equality on support
  for (const auto& cell : peak) {
    for (int i = 0; i < 3; ++i) {
      Rat val = cell.linear.dot(to_rat(pts[static_cast<size_t>(i)])) + cell.offset;
      Rat h = i == 1 ? Rat(1) : Rat(0);
      bool inSupport =
          std::find(cell.support.begin(), cell.support.end(), i) != cell.support.end();
      CHECK(val >= h);
      CHECK((val == h) == inSupport);
    }
  }
}

TEST_CASE("upper hull: quadratic lift triangulates the triangle unimodularly") {
  for (int d : {1, 2, 3}) {
    auto pts = triangle_points(d);
    std::vector<Rat> h;
    for (const auto& p : pts)
      h.push_back(Rat(-(p(0) * p(0) + p(1) * p(1) + p(0) * p(1))));
    auto cells = upper_hull(pts, h);
    CHECK(static_cast<int>(cells.size()) == d * d);
    Int total = 0;
    for (const auto& cell : cells) {
      REQUIRE(cell.support.size() == 3);
      std::vector<IntVec> cp;
      for (int i : cell.support) cp.push_back(pts[static_cast<size_t>(i)]);
      Int vol = normalized_volume(cp);
      CHECK(vol == 1);
      total += vol;
    }
    CHECK(total == d * d);
  }
}

TEST_CASE("upper hull: random lifts tile the triangle") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> hdist(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + trial % 3;
    auto pts = triangle_points(d);
    std::vector<Rat> h;
    for (size_t i = 0; i < pts.size(); ++i) h.push_back(Rat(hdist(rng)) / Rat(7));
    auto cells = upper_hull(pts, h);

    Int total = 0;
    for (const auto& cell : cells) {
      std::vector<IntVec> cp;
      for (int i : cell.support) cp.push_back(pts[static_cast<size_t>(i)]);
      total += normalized_volume(cp);
    }
    REQUIRE(total == d * d);

    // a generic interior sample lies in at least one (usually exactly one) cell
    std::uniform_int_distribution<int> num(1, 6 * d - 1);
    for (int s = 0; s < 10; ++s) {
      RatVec p(2);
      p << Rat(num(rng)) / Rat(7), Rat(num(rng)) / Rat(7);
      if (p(0) + p(1) >= d) continue;
      int hits = 0;
      for (const auto& cell : cells) {
        std::vector<RatVec> cp;
        for (int i : cell.support) cp.push_back(to_rat(pts[static_cast<size_t>(i)]));
        if (polytope_contains(cp, p)) ++hits;
      }
      CHECK(hits >= 1);
    }
  }
}

TEST_CASE("upper hull: three-dimensional flat lift is a single cell") {
  std::vector<IntVec> tet = {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
  auto cells = upper_hull(tet, {Rat(0), Rat(0), Rat(0), Rat(0)});
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].support.size() == 4);
}
