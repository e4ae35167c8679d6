#include <doctest.h>

#include "trop/cosheaf.hpp"
#include "trop/lattice.hpp"

#include "fixtures.hpp"

using namespace trop;

namespace {

// ranks of the framing group grouped by (sedentarity depth, cell dimension)
std::map<std::pair<size_t, int>, std::set<int>> rank_table(const FramedComplex& f) {
  std::map<std::pair<size_t, int>, std::set<int>> t;
  const TropicalComplex& x = f.space();
  for (int i = 0; i < x.size(); ++i)
    t[{x.cell(i).sed.size(), x.cell(i).dim}].insert(f.rank(i));
  return t;
}

void check_functorial(const FramedComplex& f) {
  const TropicalComplex& x = f.space();
  for (int s = 0; s < x.size(); ++s) {
    CHECK(f.face_map(s, s) == IntMat(IntMat::Identity(f.rank(s), f.rank(s))));
    for (int t = 0; t < x.size(); ++t) {
      if (t == s || !x.is_face(t, s)) continue;
      for (int r = 0; r < x.size(); ++r) {
        if (r == t || !x.is_face(r, t)) continue;
        IntMat direct = f.face_map(s, r);
        IntMat composed = f.face_map(t, r) * f.face_map(s, t);
        CHECK(direct == composed);
      }
    }
  }
}

}  // namespace

TEST_CASE("framing ranks on a line") {
  TropicalComplex x = fixtures::curve(1);
  FramedComplex f0(x, 0), f1(x, 1), f2(x, 2);
  for (int i = 0; i < x.size(); ++i) CHECK(f0.rank(i) == 1);
  auto t = rank_table(f1);
  CHECK(t[{0, 0}] == std::set<int>{2});  // the vertex sees all three directions
  CHECK(t[{0, 1}] == std::set<int>{1});  // each ray keeps its own direction
  CHECK(t[{1, 0}] == std::set<int>{0});  // at a leaf every tangent is quotiented away
  for (int i = 0; i < x.size(); ++i) CHECK(f2.rank(i) == 0);
}

TEST_CASE("framing ranks on the plane") {
  TropicalComplex x = fixtures::plane();
  FramedComplex f1(x, 1);
  auto t1 = rank_table(f1);
  CHECK(t1[{0, 0}] == std::set<int>{3});
  CHECK(t1[{0, 1}] == std::set<int>{3});
  CHECK(t1[{0, 2}] == std::set<int>{2});
  CHECK(t1[{1, 0}] == std::set<int>{2});
  CHECK(t1[{1, 1}] == std::set<int>{1});
  CHECK(t1[{2, 0}] == std::set<int>{0});

  FramedComplex f2(x, 2);
  auto t2 = rank_table(f2);
  CHECK(t2[{0, 0}] == std::set<int>{3});
  CHECK(t2[{0, 1}] == std::set<int>{2});
  CHECK(t2[{0, 2}] == std::set<int>{1});
  CHECK(t2[{1, 0}] == std::set<int>{0});
  CHECK(t2[{1, 1}] == std::set<int>{0});
  CHECK(t2[{2, 0}] == std::set<int>{0});

  FramedComplex f3(x, 3);
  for (int i = 0; i < x.size(); ++i) CHECK(f3.rank(i) == 0);
}

TEST_CASE("face maps compose") {
  TropicalComplex c = fixtures::curve(2);
  check_functorial(FramedComplex(c, 0));
  check_functorial(FramedComplex(c, 1));
  TropicalComplex p = fixtures::plane();
  check_functorial(FramedComplex(p, 1));
  check_functorial(FramedComplex(p, 2));
}

TEST_CASE("zeroth framing is the constant group") {
  TropicalComplex x = fixtures::curve(2);
  FramedComplex f(x, 0);
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t) {
      if (!x.is_face(t, s)) continue;
      IntMat m = f.face_map(s, t);
      REQUIRE(m.rows() == 1);
      REQUIRE(m.cols() == 1);
      CHECK(m(0, 0) == 1);
    }
}
