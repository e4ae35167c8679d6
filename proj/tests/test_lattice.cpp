#include <doctest.h>

#include <random>

#include "trop/lattice.hpp"

using namespace trop;

namespace {

IntMat random_mat(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = d(rng);
  return m;
}

// Random unimodular matrix: a handful of elementary operations on I.
IntMat random_unimodular(std::mt19937& rng, int n) {
  IntMat u = IntMat::Identity(n, n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-3, 3);
  for (int step = 0; step < 3 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    u.col(i) += Int(coef(rng)) * u.col(j);
  }
  return u;
}

// gcd of all k x k minors (1 for k = 0).
Int minor_gcd(const IntMat& m, int k) {
  if (k == 0) return 1;
  IntMat comp = compound(m, k);
  Int g = 0;
  for (Eigen::Index j = 0; j < comp.cols(); ++j)
    for (Eigen::Index i = 0; i < comp.rows(); ++i) g = bmp::gcd(g, comp(i, j));
  return g;
}

IntMat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows.begin()->size());
  IntMat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("integer determinant") {
  CHECK(det_int(IntMat::Identity(4, 4)) == 1);
  CHECK(det_int(from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(det_int(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_int(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 6;
    IntMat m = random_mat(rng, n, n, -9, 9);
    Eigen::FullPivLU<RatMat> lu(to_rat(m));
    CHECK(Rat(det_int(m)) == lu.determinant());
  }
}

TEST_CASE("smith normal form: transforms, divisibility, minor-gcd invariants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
    IntMat m = random_mat(rng, r, c, -5, 5);
    SNFResult s = smith_normal_form(m);

    IntMat d = s.U * m * s.V;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        Int want = (i == j && i < s.rank) ? s.diagonal[static_cast<size_t>(i)] : Int(0);
        REQUIRE(d(i, j) == want);
      }
    REQUIRE(bmp::abs(det_int(s.U)) == 1);
    REQUIRE(bmp::abs(det_int(s.V)) == 1);
    REQUIRE(is_zero(IntMat(s.U * s.Uinv - IntMat::Identity(r, r))));
    REQUIRE(is_zero(IntMat(s.V * s.Vinv - IntMat::Identity(c, c))));
    for (int i = 0; i + 1 < s.rank; ++i)
      REQUIRE(s.diagonal[static_cast<size_t>(i + 1)] %
                  s.diagonal[static_cast<size_t>(i)] ==
              0);

    Int prev = 1;
    for (int k = 1; k <= std::min(r, c); ++k) {
      Int g = minor_gcd(m, k);
      if (k <= s.rank) {
        REQUIRE(g == prev * s.diagonal[static_cast<size_t>(k - 1)]);
        prev = g;
      } else {
        REQUIRE(g == 0);
      }
    }
  }
}

TEST_CASE("smith normal form: handpicked") {
  SNFResult s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  REQUIRE(s.rank == 2);
  CHECK(s.diagonal[0] == 1);
  CHECK(s.diagonal[1] == 6);

  SNFResult z = smith_normal_form(IntMat::Zero(3, 2));
  CHECK(z.rank == 0);
  CHECK(z.diagonal.empty());
}

TEST_CASE("sparse diagonal smith form agrees with dense") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + static_cast<int>(rng() % 10), c = 1 + static_cast<int>(rng() % 10);
    IntMat m = random_mat(rng, r, c, -3, 3);
    // sparsify
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (rng() % 3 != 0) m(i, j) = 0;
    SparseMat sp;
    sp.rows = r;
    sp.cols = c;
    sp.col.resize(static_cast<size_t>(c));
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (m(i, j) != 0) sp.col[static_cast<size_t>(j)].push_back({i, m(i, j)});
    DiagSNF got = smith_diagonal(sp);
    SNFResult want = smith_normal_form(m);
    REQUIRE(got.rank == want.rank);
    REQUIRE(got.diagonal == want.diagonal);
  }
}

TEST_CASE("hermite basis is canonical for the column lattice") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    int k = 1 + static_cast<int>(rng() % n);
    IntMat b = random_mat(rng, n, k, -6, 6);
    IntMat h1 = hermite_basis(b);
    IntMat recomb = b * random_unimodular(rng, k);
    IntMat h2 = hermite_basis(recomb);
    REQUIRE(h1.rows() == h2.rows());
    REQUIRE(h1.cols() == h2.cols());
    REQUIRE(is_zero(IntMat(h1 - h2)));
    // same lattice both ways
    for (Eigen::Index j = 0; j < h1.cols(); ++j)
      CHECK(solve_int(b, IntVec(h1.col(j))).has_value());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      CHECK(solve_int(h1, IntVec(b.col(j))).has_value());
  }

  // echelon shape: pivots positive, zeros right of each pivot row
  IntMat h = hermite_basis(from_rows({{4, 6}, {0, 0}, {3, 3}}));
  REQUIRE(h.cols() == 2);
  CHECK(h(0, 0) == 2);
  CHECK(h(0, 1) == 0);
  CHECK(h(2, 1) == 3);
}

TEST_CASE("saturation and integral kernel") {
  // span{(2,0),(0,4)} saturates to Z^2
  IntMat s = saturation(from_rows({{2, 0}, {0, 4}}));
  REQUIRE(s.cols() == 2);
  CHECK(is_zero(IntMat(s - IntMat::Identity(2, 2))));

  // span{(2,2)} saturates to span{(1,1)}
  IntMat s2 = saturation(from_rows({{2}, {2}}));
  REQUIRE(s2.cols() == 1);
  CHECK(s2(0, 0) == 1);
  CHECK(s2(1, 0) == 1);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IntMat m = random_mat(rng, r, c, -4, 4);
    IntMat k = kernel_int(m);
    REQUIRE(is_zero(IntMat(m * k)));
    REQUIRE(static_cast<int>(k.cols()) == c - rank_rat(to_rat(m)));
    // kernel lattice is saturated: saturating it changes nothing
    if (k.cols() > 0) REQUIRE(is_zero(IntMat(saturation(k) - hermite_basis(k))));
  }
}

TEST_CASE("integral solve") {
  IntMat m = from_rows({{2, 0}, {0, 2}});
  IntVec odd(2);
  odd << 1, 0;
  CHECK(!solve_int(m, odd).has_value());
  IntVec rhs(2);
  rhs << 4, -6;
  auto x = solve_int(m, rhs);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == 2);
  CHECK((*x)(1) == -3);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IntMat a = random_mat(rng, r, c, -5, 5);
    IntVec x0 = random_mat(rng, c, 1, -5, 5).col(0);
    IntVec b = a * x0;
    auto got = solve_int(a, b);
    REQUIRE(got.has_value());
    REQUIRE(is_zero(IntVec(a * *got - b)));
  }
}

TEST_CASE("lattice index") {
  IntMat z2 = IntMat::Identity(2, 2);
  LatticeIndex i1 = lattice_index(z2, from_rows({{2, 0}, {0, 1}}));
  REQUIRE(i1.finite);
  CHECK(i1.value == 2);

  LatticeIndex i2 = lattice_index(z2, from_rows({{1}, {1}}));
  CHECK(!i2.finite);

  // index is multiplicative along a chain
  IntMat a = from_rows({{2, 1}, {0, 3}});
  LatticeIndex i3 = lattice_index(z2, a);
  REQUIRE(i3.finite);
  CHECK(i3.value == 6);
  LatticeIndex i4 = lattice_index(a, from_rows({{4, 2}, {0, 6}}));
  REQUIRE(i4.finite);
  CHECK(i4.value == 4);

  CHECK_THROWS_AS(lattice_index(a, from_rows({{1, 0}, {0, 1}})), validation_error);
  CHECK_THROWS_AS(lattice_index(from_rows({{1}, {0}}), from_rows({{0}, {1}})),
                  validation_error);
}

TEST_CASE("compound matrices") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int k = 2 + static_cast<int>(rng() % 3);
    int m = 2 + static_cast<int>(rng() % 3);
    int p = 1 + static_cast<int>(rng() % std::min({n, k, m}));
    IntMat a = random_mat(rng, n, k, -3, 3), b = random_mat(rng, k, m, -3, 3);
    // multiplicativity of the p-th compound
    REQUIRE(is_zero(IntMat(compound(IntMat(a * b), p) - compound(a, p) * compound(b, p))));
  }
  IntMat c0 = compound(from_rows({{3, 1}, {1, 2}}), 0);
  REQUIRE(c0.rows() == 1);
  CHECK(c0(0, 0) == 1);
  IntMat c2 = compound(from_rows({{3, 1}, {1, 2}}), 2);
  REQUIRE(c2.rows() == 1);
  CHECK(c2(0, 0) == 5);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(parse_rat(" 3/4 ") == Rat(3) / Rat(4));
  CHECK(parse_rat("-6/4") == Rat(-3) / Rat(2));
  CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
  CHECK(format_rat(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat(""), input_error);
  CHECK_THROWS_AS(parse_rat("1/0"), input_error);
  CHECK_THROWS_AS(parse_rat("a/2"), input_error);
  CHECK_THROWS_AS(parse_rat("1.5"), input_error);
  CHECK_THROWS_AS(parse_rat("2/"), input_error);
}

TEST_CASE("primitive vectors and floor division") {
  RatVec v(3);
  v << Rat(1) / Rat(2), Rat(-3) / Rat(4), Rat(0);
  IntVec p = primitive(v);
  CHECK(p(0) == 2);
  CHECK(p(1) == -3);
  CHECK(p(2) == 0);
  IntVec w(2);
  w << -4, -6;
  IntVec pw = primitive(w);
  CHECK(pw(0) == -2);
  CHECK(pw(1) == -3);
  CHECK(fdiv(Int(7), Int(2)) == 3);
  CHECK(fdiv(Int(-7), Int(2)) == -4);
  CHECK(fdiv(Int(7), Int(-2)) == -4);
  CHECK(fdiv(Int(-7), Int(-2)) == 3);
  CHECK(fdiv(Int(6), Int(2)) == 3);
  CHECK(fdiv(Int(-6), Int(2)) == -3);
}
