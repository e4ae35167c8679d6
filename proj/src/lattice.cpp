#include "trop/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

Int det_int(const IntMat& m) {
  if (m.rows() != m.cols()) throw validation_error("determinant of non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

SNFResult smith_normal_form(const IntMat& m) {
  const int r = static_cast<int>(m.rows());
  const int c = static_cast<int>(m.cols());
  IntMat a = m;
  SNFResult res;
  res.U = IntMat::Identity(r, r);
  res.Uinv = IntMat::Identity(r, r);
  res.V = IntMat::Identity(c, c);
  res.Vinv = IntMat::Identity(c, c);

  // Invariant: a == res.U * m * res.V throughout.
  auto row_add = [&](int i, int j, const Int& k) {  // row_i += k * row_j
    a.row(i) += k * a.row(j);
    res.U.row(i) += k * res.U.row(j);
    res.Uinv.col(j) -= k * res.Uinv.col(i);
  };
  auto row_swap = [&](int i, int j) {
    a.row(i).swap(a.row(j));
    res.U.row(i).swap(res.U.row(j));
    res.Uinv.col(i).swap(res.Uinv.col(j));
  };
  auto row_neg = [&](int i) {
    a.row(i) = -a.row(i);
    res.U.row(i) = -res.U.row(i);
    res.Uinv.col(i) = -res.Uinv.col(i);
  };
  auto col_add = [&](int i, int j, const Int& k) {  // col_i += k * col_j
    a.col(i) += k * a.col(j);
    res.V.col(i) += k * res.V.col(j);
    res.Vinv.row(j) -= k * res.Vinv.row(i);
  };
  auto col_swap = [&](int i, int j) {
    a.col(i).swap(a.col(j));
    res.V.col(i).swap(res.V.col(j));
    res.Vinv.row(i).swap(res.Vinv.row(j));
  };

  const int mn = std::min(r, c);
  for (int t = 0; t < mn; ++t) {
    // Smallest-magnitude nonzero entry of the remaining block becomes the pivot.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int j = t; j < c; ++j)
      for (int i = t; i < r; ++i) {
        if (a(i, j) == 0) continue;
        Int v = bmp::abs(a(i, j));
        if (pi < 0 || v < best) { pi = i; pj = j; best = v; }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);

    for (;;) {
      // Euclidean clearing of column t and row t.
      bool again = false;
      for (int i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        if (q != 0) row_add(i, t, -q);
        if (a(i, t) != 0) { row_swap(t, i); again = true; }
      }
      if (again) continue;
      for (int j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) col_add(j, t, -q);
        if (a(t, j) != 0) { col_swap(t, j); again = true; }
      }
      if (again) continue;

      // Pivot must divide the rest of the block, or we fold the offending
      // row in and clear again.
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) { bad = i; break; }
      if (bad < 0) break;
      row_add(t, bad, 1);
    }
    if (a(t, t) < 0) row_neg(t);
    res.diagonal.push_back(a(t, t));
  }
  res.rank = static_cast<int>(res.diagonal.size());
  return res;
}

DiagSNF smith_diagonal(const SparseMat& m) {
  // row -> (col -> value), plus per-column live row sets.
  std::vector<std::map<int, Int>> rows(m.rows);
  std::vector<std::set<int>> colrows(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[static_cast<size_t>(j)]) {
      if (v == 0) continue;
      rows[static_cast<size_t>(i)][j] = v;
      colrows[static_cast<size_t>(j)].insert(i);
    }
  std::vector<bool> row_live(m.rows, true), col_live(m.cols, true);

  DiagSNF out;
  int unit_rank = 0;
  for (;;) {
    // Cheapest unit pivot by Markowitz count, ties by position.
    int pi = -1, pj = -1;
    long bestScore = -1;
    for (int i = 0; i < m.rows; ++i) {
      if (!row_live[static_cast<size_t>(i)]) continue;
      const auto& row = rows[static_cast<size_t>(i)];
      for (const auto& [j, v] : row) {
        if (v != 1 && v != -1) continue;
        long score = (static_cast<long>(row.size()) - 1) *
                     (static_cast<long>(colrows[static_cast<size_t>(j)].size()) - 1);
        if (bestScore < 0 || score < bestScore) {
          bestScore = score;
          pi = i;
          pj = j;
        }
        if (bestScore == 0) break;
      }
      if (bestScore == 0) break;
    }
    if (pi < 0) break;

    // Clear column pj with row operations; the pivot row/column then retire.
    const Int s = rows[static_cast<size_t>(pi)][pj];  // +-1
    std::vector<int> targets(colrows[static_cast<size_t>(pj)].begin(),
                             colrows[static_cast<size_t>(pj)].end());
    for (int i : targets) {
      if (i == pi) continue;
      auto& row = rows[static_cast<size_t>(i)];
      Int f = row[pj] * s;  // row_i -= f * row_pi zeroes entry (i, pj)
      for (const auto& [j, v] : rows[static_cast<size_t>(pi)]) {
        auto it = row.find(j);
        if (it == row.end()) {
          Int nv = -f * v;
          if (nv != 0) {
            row[j] = nv;
            colrows[static_cast<size_t>(j)].insert(i);
          }
        } else {
          it->second -= f * v;
          if (it->second == 0) {
            row.erase(it);
            colrows[static_cast<size_t>(j)].erase(i);
          }
        }
      }
    }
    for (const auto& [j, v] : rows[static_cast<size_t>(pi)])
      colrows[static_cast<size_t>(j)].erase(pi);
    rows[static_cast<size_t>(pi)].clear();
    row_live[static_cast<size_t>(pi)] = false;
    col_live[static_cast<size_t>(pj)] = false;
    ++unit_rank;
  }

  // Whatever is left has no +-1 entries; hand it to the dense routine.
  std::vector<int> ri, ci;
  for (int i = 0; i < m.rows; ++i)
    if (row_live[static_cast<size_t>(i)] && !rows[static_cast<size_t>(i)].empty())
      ri.push_back(i);
  std::set<int> usedCols;
  for (int i : ri)
    for (const auto& [j, v] : rows[static_cast<size_t>(i)]) usedCols.insert(j);
  ci.assign(usedCols.begin(), usedCols.end());

  out.rank = unit_rank;
  out.diagonal.assign(static_cast<size_t>(unit_rank), Int(1));
  if (!ri.empty()) {
    IntMat rest = IntMat::Zero(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
    std::map<int, int> cpos;
    for (size_t k = 0; k < ci.size(); ++k) cpos[ci[k]] = static_cast<int>(k);
    for (size_t k = 0; k < ri.size(); ++k)
      for (const auto& [j, v] : rows[static_cast<size_t>(ri[k])])
        rest(static_cast<int>(k), cpos[j]) = v;
    SNFResult snf = smith_normal_form(rest);
    out.rank += snf.rank;
    out.diagonal.insert(out.diagonal.end(), snf.diagonal.begin(), snf.diagonal.end());
  }
  return out;
}

IntMat hermite_basis(const IntMat& m) {
  IntMat a = m;
  const int r = static_cast<int>(a.rows());
  const int c = static_cast<int>(a.cols());
  int piv = 0;
  for (int row = 0; row < r && piv < c; ++row) {
    for (;;) {
      int best = -1;
      Int bestAbs = 0;
      for (int j = piv; j < c; ++j) {
        if (a(row, j) == 0) continue;
        Int v = bmp::abs(a(row, j));
        if (best < 0 || v < bestAbs) { best = j; bestAbs = v; }
      }
      if (best < 0) break;  // no pivot in this row
      if (best != piv) a.col(piv).swap(a.col(best));
      bool clean = true;
      for (int j = piv + 1; j < c; ++j) {
        if (a(row, j) == 0) continue;
        Int q = a(row, j) / a(row, piv);
        if (q != 0) a.col(j) -= q * a.col(piv);
        if (a(row, j) != 0) clean = false;
      }
      if (clean) {
        if (a(row, piv) < 0) a.col(piv) = -a.col(piv);
        for (int j = 0; j < piv; ++j) {
          Int q = fdiv(a(row, j), a(row, piv));
          if (q != 0) a.col(j) -= q * a.col(piv);
        }
        ++piv;
        break;
      }
    }
  }
  return a.leftCols(piv);
}

IntMat saturation(const IntMat& m) {
  SNFResult snf = smith_normal_form(m);
  return hermite_basis(snf.Uinv.leftCols(snf.rank));
}

IntMat kernel_int(const IntMat& m) {
  SNFResult snf = smith_normal_form(m);
  const int c = static_cast<int>(m.cols());
  return hermite_basis(snf.V.rightCols(c - snf.rank));
}

std::optional<IntVec> solve_int(const IntMat& m, const IntVec& b) {
  if (b.size() != m.rows()) throw validation_error("solve_int: size mismatch");
  SNFResult snf = smith_normal_form(m);
  IntVec ub = snf.U * b;
  IntVec y = IntVec::Zero(m.cols());
  for (int i = 0; i < snf.rank; ++i) {
    const Int& d = snf.diagonal[static_cast<size_t>(i)];
    if (ub(i) % d != 0) return std::nullopt;
    y(i) = ub(i) / d;
  }
  for (int i = snf.rank; i < m.rows(); ++i)
    if (ub(i) != 0) return std::nullopt;
  return IntVec(snf.V * y);
}

std::optional<RatVec> solve_rat(const RatMat& m, const RatVec& b) {
  if (b.size() != m.rows()) throw validation_error("solve_rat: size mismatch");
  if (m.cols() == 0) {
    if (is_zero(b)) return RatVec(RatVec::Zero(0));
    return std::nullopt;
  }
  if (m.rows() == 0) return RatVec(RatVec::Zero(m.cols()));
  Eigen::FullPivLU<RatMat> lu(m);
  RatVec x = lu.solve(b);
  if (is_zero(RatVec(m * x - b))) return x;
  return std::nullopt;
}

std::optional<RatMat> solve_rat(const RatMat& m, const RatMat& b) {
  if (b.rows() != m.rows()) throw validation_error("solve_rat: size mismatch");
  if (m.cols() == 0) {
    if (is_zero(b)) return RatMat(RatMat::Zero(0, b.cols()));
    return std::nullopt;
  }
  if (m.rows() == 0) return RatMat(RatMat::Zero(m.cols(), b.cols()));
  Eigen::FullPivLU<RatMat> lu(m);
  RatMat x = lu.solve(b);
  if (is_zero(RatMat(m * x - b))) return x;
  return std::nullopt;
}

int rank_rat(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<RatMat> lu(m);
  return static_cast<int>(lu.rank());
}

LatticeIndex lattice_index(const IntMat& ambient, const IntMat& sub) {
  if (ambient.rows() != sub.rows())
    throw validation_error("lattice_index: ambient dimension mismatch");
  const int r = static_cast<int>(ambient.cols());
  if (rank_rat(to_rat(ambient)) != r)
    throw validation_error("lattice_index: ambient generators are dependent");
  auto x = solve_rat(to_rat(ambient), to_rat(sub));
  if (!x) throw validation_error("lattice_index: not contained in the ambient span");
  if (rank_rat(*x) < r) return {false, 0};

  Int d = 1;
  for (Eigen::Index j = 0; j < x->cols(); ++j)
    for (Eigen::Index i = 0; i < x->rows(); ++i) d = bmp::lcm(d, den((*x)(i, j)));
  IntMat xi(x->rows(), x->cols());
  for (Eigen::Index j = 0; j < x->cols(); ++j)
    for (Eigen::Index i = 0; i < x->rows(); ++i) {
      Rat s = (*x)(i, j) * Rat(d);
      xi(i, j) = num(s);
    }
  SNFResult snf = smith_normal_form(xi);
  Rat idx = 1;
  for (const Int& di : snf.diagonal) idx *= Rat(di);
  for (int i = 0; i < r; ++i) idx /= Rat(d);
  if (den(idx) != 1)
    throw validation_error("lattice_index: not a sublattice of the ambient lattice");
  return {true, num(idx)};
}

std::vector<std::vector<int>> subsets_lex(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) cur[static_cast<size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

IntMat compound(const IntMat& m, int p) {
  if (p == 0) return IntMat::Identity(1, 1);
  auto rowsets = subsets_lex(static_cast<int>(m.rows()), p);
  auto colsets = subsets_lex(static_cast<int>(m.cols()), p);
  IntMat out(static_cast<int>(rowsets.size()), static_cast<int>(colsets.size()));
  IntMat minor(p, p);
  for (size_t a = 0; a < rowsets.size(); ++a)
    for (size_t b = 0; b < colsets.size(); ++b) {
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
          minor(i, j) = m(rowsets[a][static_cast<size_t>(i)],
                          colsets[b][static_cast<size_t>(j)]);
      out(static_cast<int>(a), static_cast<int>(b)) = det_int(minor);
    }
  return out;
}

IntMat wedge_basis(const IntMat& gens, int p) { return compound(gens, p); }

}  // namespace trop
