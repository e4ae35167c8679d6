#include "trop/hull.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace trop {

namespace {

// Matrix whose columns are pts[i] - pts[0].
RatMat difference_matrix(const std::vector<RatVec>& pts) {
  const int n = static_cast<int>(pts[0].size());
  RatMat d(n, static_cast<int>(pts.size()) - 1);
  for (size_t i = 1; i < pts.size(); ++i) d.col(static_cast<int>(i) - 1) = pts[i] - pts[0];
  return d;
}

// Rational basis of the column span (subset of the original columns).
RatMat span_basis(const RatMat& m) {
  if (m.cols() == 0) return RatMat(m.rows(), 0);
  Eigen::FullPivLU<RatMat> lu(m);
  if (lu.rank() == 0) return RatMat(m.rows(), 0);
  return lu.image(m);
}

// Coordinates of each column of v in the basis b (must be consistent).
RatMat coordinates(const RatMat& b, const RatMat& v) {
  auto x = solve_rat(b, v);
  if (!x) throw validation_error("points do not lie in the expected span");
  return *x;
}

// Primitive integer kernel vector of a rational matrix with nullity one.
IntVec kernel_vector(const RatMat& m) {
  Int scale = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) scale = bmp::lcm(scale, den(m(i, j)));
  IntMat mi(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) mi(i, j) = num(m(i, j) * Rat(scale));
  IntMat k = kernel_int(mi);
  if (k.cols() != 1) return IntVec(0);
  return primitive(IntVec(k.col(0)));
}

// Lift a functional given in local coordinates (w.r.t. basis b) to an
// ambient covector w with w^T b = phi^T.
RatVec ambient_functional(const RatMat& b, const RatVec& phi) {
  auto w = solve_rat(RatMat(b.transpose()), phi);
  if (!w) throw validation_error("functional lift failed");
  return *w;
}

struct LocalFrame {
  RatMat basis;          // ambient n x r
  std::vector<RatVec> y; // local r-dim coordinates per point
  int dim = 0;
};

LocalFrame local_frame(const std::vector<RatVec>& pts) {
  LocalFrame f;
  RatMat d = difference_matrix(pts);
  f.basis = span_basis(d);
  f.dim = static_cast<int>(f.basis.cols());
  RatMat coords = f.dim == 0 ? RatMat(0, d.cols()) : coordinates(f.basis, d);
  f.y.resize(pts.size(), RatVec::Zero(f.dim));
  for (size_t i = 1; i < pts.size(); ++i) f.y[i] = coords.col(static_cast<int>(i) - 1);
  return f;
}

}  // namespace

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  return rank_rat(difference_matrix(pts));
}

std::vector<AffineFacet> polytope_facets(const std::vector<RatVec>& pts) {
  std::vector<AffineFacet> out;
  if (pts.empty()) return out;
  LocalFrame f = local_frame(pts);
  const int r = f.dim;
  if (r == 0) return out;
  const int m = static_cast<int>(pts.size());

  std::set<std::vector<int>> seen;
  for (const auto& sub : subsets_lex(m, r)) {
    // Hyperplane through the chosen points, if they affinely span one.
    RatMat rows(r - 1, r);
    for (int k = 1; k < r; ++k)
      rows.row(k - 1) = (f.y[static_cast<size_t>(sub[static_cast<size_t>(k)])] -
                         f.y[static_cast<size_t>(sub[0])])
                            .transpose();
    IntVec nu = kernel_vector(rows);
    if (nu.size() == 0) continue;
    RatVec nuq = to_rat(nu);
    Rat c = nuq.dot(f.y[static_cast<size_t>(sub[0])]);
    bool above = false, below = false;
    for (int i = 0; i < m && !(above && below); ++i) {
      Rat v = nuq.dot(f.y[static_cast<size_t>(i)]);
      if (v > c) above = true;
      if (v < c) below = true;
    }
    if (above && below) continue;
    if (above) {
      nuq = -nuq;
      c = -c;
    }
    std::vector<int> support;
    for (int i = 0; i < m; ++i)
      if (nuq.dot(f.y[static_cast<size_t>(i)]) == c) support.push_back(i);
    if (!seen.insert(support).second) continue;

    RatVec w = ambient_functional(f.basis, nuq);
    Rat offset = c + w.dot(pts[0]);
    // joint primitive normalization for a deterministic representative
    RatVec stacked(w.size() + 1);
    stacked.head(w.size()) = w;
    stacked(w.size()) = offset;
    IntVec prim = primitive(stacked);
    AffineFacet facet;
    facet.support = std::move(support);
    facet.normal = to_rat(IntVec(prim.head(w.size())));
    facet.offset = Rat(prim(w.size()));
    out.push_back(std::move(facet));
  }
  std::sort(out.begin(), out.end(),
            [](const AffineFacet& a, const AffineFacet& b) { return a.support < b.support; });
  return out;
}

std::vector<std::vector<int>> polytope_faces(const std::vector<RatVec>& pts) {
  std::set<std::vector<int>> seen;
  std::vector<int> all(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  std::deque<std::vector<int>> queue{all};
  seen.insert(all);
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    std::vector<RatVec> sub;
    sub.reserve(cur.size());
    for (int i : cur) sub.push_back(pts[static_cast<size_t>(i)]);
    for (const auto& facet : polytope_facets(sub)) {
      std::vector<int> global;
      global.reserve(facet.support.size());
      for (int k : facet.support) global.push_back(cur[static_cast<size_t>(k)]);
      if (seen.insert(global).second) queue.push_back(global);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> polytope_vertices(const std::vector<RatVec>& pts) {
  std::vector<int> out;
  for (const auto& face : polytope_faces(pts)) {
    if (face.size() != 1) continue;
    out.push_back(face[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> pulling_triangulation(const std::vector<RatVec>& pts) {
  std::vector<int> all(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);

  std::function<std::vector<std::vector<int>>(const std::vector<int>&)> rec =
      [&](const std::vector<int>& sub) -> std::vector<std::vector<int>> {
    std::vector<RatVec> p;
    p.reserve(sub.size());
    for (int i : sub) p.push_back(pts[static_cast<size_t>(i)]);
    int d = affine_dim(p);
    if (d <= 0) return {{sub[0]}};
    if (static_cast<int>(sub.size()) == d + 1) return {sub};

    // pull the lex-least point (always a vertex)
    int apexLocal = 0;
    for (size_t i = 1; i < p.size(); ++i)
      if (lex_less(p[i], p[static_cast<size_t>(apexLocal)])) apexLocal = static_cast<int>(i);
    int apex = sub[static_cast<size_t>(apexLocal)];

    std::vector<std::vector<int>> out;
    for (const auto& facet : polytope_facets(p)) {
      bool containsApex = false;
      for (int k : facet.support)
        if (sub[static_cast<size_t>(k)] == apex) containsApex = true;
      if (containsApex) continue;
      std::vector<int> global;
      global.reserve(facet.support.size());
      for (int k : facet.support) global.push_back(sub[static_cast<size_t>(k)]);
      for (auto s : rec(global)) {
        s.push_back(apex);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
    }
    return out;
  };
  auto out = rec(all);
  std::sort(out.begin(), out.end());
  return out;
}

Int normalized_volume(const std::vector<IntVec>& pts) {
  if (pts.empty()) return 0;
  const int n = static_cast<int>(pts[0].size());
  IntMat diffs(n, static_cast<int>(pts.size()) - 1);
  for (size_t i = 1; i < pts.size(); ++i)
    diffs.col(static_cast<int>(i) - 1) = pts[i] - pts[0];
  IntMat basis = saturation(diffs);
  const int r = static_cast<int>(basis.cols());
  if (r == 0) return 1;

  // integer coordinates in the saturated tangent lattice
  std::vector<RatVec> local(pts.size(), RatVec::Zero(r));
  std::vector<IntVec> localInt(pts.size(), IntVec::Zero(r));
  for (size_t i = 1; i < pts.size(); ++i) {
    auto y = solve_int(basis, IntVec(pts[i] - pts[0]));
    if (!y) throw validation_error("point outside the saturated difference lattice");
    localInt[i] = *y;
    local[i] = to_rat(*y);
  }

  Int total = 0;
  IntMat edges(r, r);
  for (const auto& simplex : pulling_triangulation(local)) {
    for (int k = 1; k <= r; ++k)
      edges.col(k - 1) = localInt[static_cast<size_t>(simplex[static_cast<size_t>(k)])] -
                         localInt[static_cast<size_t>(simplex[0])];
    total += bmp::abs(det_int(edges));
  }
  return total;
}

std::vector<ConeFacet> cone_facets(const RatMat& gens) {
  std::vector<ConeFacet> out;
  const int m = static_cast<int>(gens.cols());
  if (m == 0) return out;
  RatMat basis = span_basis(gens);
  const int r = static_cast<int>(basis.cols());
  if (r == 0) return out;
  RatMat y = coordinates(basis, gens);

  std::set<std::vector<int>> seen;
  for (const auto& sub : subsets_lex(m, r - 1)) {
    RatMat rows(r - 1, r);
    for (int k = 0; k < r - 1; ++k)
      rows.row(k) = y.col(sub[static_cast<size_t>(k)]).transpose();
    IntVec nu = kernel_vector(rows);
    if (nu.size() == 0) continue;
    RatVec nuq = to_rat(nu);
    bool above = false, below = false;
    for (int i = 0; i < m && !(above && below); ++i) {
      Rat v = nuq.dot(y.col(i));
      if (v > 0) above = true;
      if (v < 0) below = true;
    }
    if (above && below) continue;
    if (above) nuq = -nuq;
    std::vector<int> support;
    for (int i = 0; i < m; ++i)
      if (nuq.dot(y.col(i)) == 0) support.push_back(i);
    if (static_cast<int>(support.size()) == m) continue;  // not a proper face
    if (!seen.insert(support).second) continue;
    ConeFacet facet;
    facet.support = std::move(support);
    facet.normal = to_rat(primitive(ambient_functional(basis, nuq)));
    out.push_back(std::move(facet));
  }
  std::sort(out.begin(), out.end(),
            [](const ConeFacet& a, const ConeFacet& b) { return a.support < b.support; });
  return out;
}

std::vector<HullCell> upper_hull(const std::vector<IntVec>& pts,
                                 const std::vector<Rat>& heights) {
  if (pts.empty() || pts.size() != heights.size())
    throw validation_error("upper_hull: empty points or size mismatch");
  const int n = static_cast<int>(pts[0].size());
  const int m = static_cast<int>(pts.size());
  std::vector<RatVec> q = to_rat_pts(pts);
  const int dim = affine_dim(q);

  auto value = [&](const RatVec& linear, const Rat& offset, int i) {
    return Rat(linear.dot(q[static_cast<size_t>(i)]) + offset);
  };
  auto tight_set = [&](const RatVec& linear, const Rat& offset) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (value(linear, offset, i) == heights[static_cast<size_t>(i)]) s.push_back(i);
    return s;
  };

  // start from the constant functional at the maximum height
  RatVec linear = RatVec::Zero(n);
  Rat offset = heights[0];
  for (const Rat& h : heights) offset = std::max(offset, h);
  std::vector<int> support = tight_set(linear, offset);

  // grow the tight set until it spans the affine hull of the configuration
  for (;;) {
    std::vector<RatVec> sp;
    for (int i : support) sp.push_back(q[static_cast<size_t>(i)]);
    if (affine_dim(sp) == dim) break;

    // a point outside the current affine hull
    RatMat dirs = difference_matrix(sp);
    RatMat basis = span_basis(dirs);
    int outside = -1;
    for (int i = 0; i < m && outside < 0; ++i) {
      RatVec d = q[static_cast<size_t>(i)] - sp[0];
      if (basis.cols() == 0 ? !is_zero(d) : !solve_rat(basis, d).has_value()) outside = i;
    }
    if (outside < 0) throw validation_error("upper_hull: affine hull inconsistency");

    // affine functional: zero on the hull of the support, -1 at the point
    RatMat sys(static_cast<int>(support.size()) + 1, n + 1);
    RatVec rhs = RatVec::Zero(static_cast<int>(support.size()) + 1);
    for (size_t k = 0; k < support.size(); ++k) {
      sys.row(static_cast<int>(k)).head(n) = q[static_cast<size_t>(support[k])].transpose();
      sys(static_cast<int>(k), n) = 1;
    }
    sys.row(static_cast<int>(support.size())).head(n) =
        q[static_cast<size_t>(outside)].transpose();
    sys(static_cast<int>(support.size()), n) = 1;
    rhs(static_cast<int>(support.size())) = -1;
    auto mu = solve_rat(sys, rhs);
    if (!mu) throw validation_error("upper_hull: functional construction failed");
    RatVec muLin = mu->head(n);
    Rat muOff = (*mu)(n);

    Rat tbest;
    bool have = false;
    for (int i = 0; i < m; ++i) {
      Rat mv = muLin.dot(q[static_cast<size_t>(i)]) + muOff;
      if (mv >= 0) continue;
      Rat ratio = (value(linear, offset, i) - heights[static_cast<size_t>(i)]) / -mv;
      if (!have || ratio < tbest) {
        tbest = ratio;
        have = true;
      }
    }
    if (!have) throw validation_error("upper_hull: no supporting direction");
    linear += tbest * muLin;
    offset += tbest * muOff;
    support = tight_set(linear, offset);
  }

  // walk from facet to facet across interior ridges
  std::map<std::vector<int>, std::pair<RatVec, Rat>> cells;
  std::deque<std::vector<int>> queue;
  cells[support] = {linear, offset};
  queue.push_back(support);
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    auto [curLin, curOff] = cells[cur];
    std::vector<RatVec> cellPts;
    for (int i : cur) cellPts.push_back(q[static_cast<size_t>(i)]);
    for (const auto& ridge : polytope_facets(cellPts)) {
      // functional vanishing on the ridge, positive on the rest of the cell
      RatVec muLin = -ridge.normal;
      Rat muOff = ridge.offset;
      std::vector<int> shrink;
      Rat tbest;
      bool have = false;
      for (int i = 0; i < m; ++i) {
        Rat mv = muLin.dot(q[static_cast<size_t>(i)]) + muOff;
        if (mv >= 0) continue;
        Rat ratio = (value(curLin, curOff, i) - heights[static_cast<size_t>(i)]) / -mv;
        if (!have || ratio < tbest) {
          tbest = ratio;
          have = true;
        }
      }
      if (!have) continue;  // ridge on the boundary of the polytope
      RatVec nextLin = curLin + tbest * muLin;
      Rat nextOff = curOff + tbest * muOff;
      std::vector<int> next = tight_set(nextLin, nextOff);
      if (cells.emplace(next, std::make_pair(nextLin, nextOff)).second)
        queue.push_back(next);
    }
  }

  std::vector<HullCell> out;
  for (const auto& [sup, fn] : cells) {
    HullCell cell;
    cell.support = sup;
    cell.linear = fn.first;
    cell.offset = fn.second;
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace trop
