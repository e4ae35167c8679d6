#include "trop/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace trop {

namespace {

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> with_ray(const std::vector<int>& sed, int r) {
  std::vector<int> out = sed;
  out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

struct MembershipData {
  RatMat eq;  // eq * x = rhs on the affine hull
  RatVec rhs;
  std::vector<RatVec> ineq;  // (w, w0): <w, x> + w0 <= 0, tight on proper faces
};

MembershipData membership_data(const RatMat& verts, const RatMat& rays) {
  MembershipData md;
  const int d = static_cast<int>(verts.rows());
  const int nv = static_cast<int>(verts.cols());
  const int nr = static_cast<int>(rays.cols());

  // affine-hull equations from the integer kernel of the direction span
  IntMat dirs(d, std::max(0, nv - 1) + nr);
  for (int j = 1; j < nv; ++j)
    dirs.col(j - 1) = primitive(RatVec(verts.col(j) - verts.col(0)));
  for (int j = 0; j < nr; ++j)
    dirs.col(nv - 1 + j) = primitive(RatVec(rays.col(j)));
  IntMat ker = kernel_int(IntMat(dirs.transpose()));
  md.eq = to_rat(IntMat(ker.transpose()));
  md.rhs = md.eq * verts.col(0);

  // facet inequalities of the homogenization cone
  RatMat gens(d + 1, nv + nr);
  for (int j = 0; j < nv; ++j) {
    gens.col(j).head(d) = verts.col(j);
    gens(d, j) = 1;
  }
  for (int j = 0; j < nr; ++j) {
    gens.col(nv + j).head(d) = rays.col(j);
    gens(d, nv + j) = 0;
  }
  for (const auto& f : cone_facets(gens)) md.ineq.push_back(f.normal);
  return md;
}

Position poly_position(const MembershipData& md, const RatVec& y) {
  if (!is_zero(RatVec(md.eq * y - md.rhs))) return Position::outside;
  bool tight = false;
  for (const auto& w : md.ineq) {
    Rat v = w.head(y.size()).dot(y) + w(y.size());
    if (v > 0) return Position::outside;
    if (v == 0) tight = true;
  }
  return tight ? Position::boundary : Position::interior;
}

}  // namespace

bool Ambient::has_cone(const std::vector<int>& c) const {
  return std::find(cones.begin(), cones.end(), c) != cones.end();
}

Ambient projective_ambient(int n) {
  Ambient a;
  a.kind = AmbientKind::projective;
  a.n = n;
  IntVec ones = IntVec::Constant(n, 1);
  a.rays.push_back(ones);
  for (int i = 1; i <= n; ++i) {
    IntVec e = IntVec::Zero(n);
    e(i - 1) = -1;
    a.rays.push_back(e);
  }
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> cone;
    for (int r = 0; r <= n; ++r)
      if (mask & (1u << r)) cone.push_back(r);
    if (static_cast<int>(cone.size()) <= n) a.cones.push_back(cone);
  }
  std::sort(a.cones.begin(), a.cones.end(), [](const auto& p, const auto& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return p < q;
  });
  return a;
}

Ambient polytope_ambient(const std::vector<IntVec>& vertices) {
  Ambient a;
  a.kind = AmbientKind::toric;
  if (vertices.empty()) throw validation_error("polytope ambient needs vertices");
  a.n = static_cast<int>(vertices[0].size());
  auto pts = to_rat_pts(vertices);
  if (affine_dim(pts) != a.n)
    throw validation_error("polytope ambient must be full-dimensional");

  auto fs = polytope_facets(pts);
  std::vector<std::pair<std::vector<long>, std::vector<int>>> keyed;
  for (const auto& f : fs) {
    IntVec nu(a.n);
    for (int i = 0; i < a.n; ++i) nu(i) = num(f.normal(i));
    keyed.push_back({to_longs(primitive(nu)), f.support});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<int>> facetSupports;
  for (const auto& [nu, sup] : keyed) {
    IntVec r(a.n);
    for (int i = 0; i < a.n; ++i) r(i) = nu[static_cast<size_t>(i)];
    a.rays.push_back(r);
    facetSupports.push_back(sup);
  }

  std::set<std::vector<int>> cones;
  for (const auto& face : polytope_faces(pts)) {
    std::vector<int> cone;
    for (size_t i = 0; i < facetSupports.size(); ++i)
      if (contains_all(facetSupports[i], face)) cone.push_back(static_cast<int>(i));
    std::vector<RatVec> fp;
    for (int i : face) fp.push_back(pts[static_cast<size_t>(i)]);
    if (affine_dim(fp) + static_cast<int>(cone.size()) != a.n)
      throw validation_error("polytope ambient must be simple");
    cones.insert(cone);
  }
  cones.insert({});
  a.cones.assign(cones.begin(), cones.end());
  std::sort(a.cones.begin(), a.cones.end(), [](const auto& p, const auto& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return p < q;
  });
  return a;
}

TropicalComplex::TropicalComplex(Ambient ambient, TropicalPolynomial poly, Subdivision sub)
    : ambient_(std::move(ambient)), poly_(std::move(poly)), sub_(std::move(sub)) {}

IntMat TropicalComplex::chart(const std::vector<int>& sed) const {
  auto it = chart_cache_.find(sed);
  if (it != chart_cache_.end()) return it->second;
  const int n = ambient_.n;
  const int k = static_cast<int>(sed.size());
  IntMat p;
  if (ambient_.kind == AmbientKind::projective) {
    auto in_sed = [&](int i) {
      return std::find(sed.begin(), sed.end(), i) != sed.end();
    };
    p = IntMat::Zero(n - k, n);
    if (sed.empty() || sed[0] != 0) {
      int row = 0;
      for (int i = 1; i <= n; ++i) {
        if (in_sed(i)) continue;
        p(row, i - 1) = 1;
        ++row;
      }
    } else {
      int j = 0;
      for (int i = 1; i <= n; ++i)
        if (!in_sed(i)) {
          j = i;
          break;
        }
      int row = 0;
      for (int i = 1; i <= n; ++i) {
        if (i == j || in_sed(i)) continue;
        p(row, i - 1) = 1;
        p(row, j - 1) = -1;
        ++row;
      }
    }
  } else if (k == 0) {
    p = IntMat::Identity(n, n);
  } else {
    IntMat r(n, k);
    for (int i = 0; i < k; ++i) r.col(i) = ambient_.rays[static_cast<size_t>(sed[static_cast<size_t>(i)])];
    SNFResult s = smith_normal_form(saturation(r));
    p = s.U.bottomRows(n - k);
  }
  chart_cache_[sed] = p;
  return p;
}

IntMat TropicalComplex::chart_section(const std::vector<int>& sed) const {
  auto it = section_cache_.find(sed);
  if (it != section_cache_.end()) return it->second;
  IntMat p = chart(sed);
  IntMat s(ambient_.n, p.rows());
  for (int i = 0; i < p.rows(); ++i) {
    IntVec e = IntVec::Zero(p.rows());
    e(i) = 1;
    auto x = solve_int(p, e);
    if (!x) throw validation_error("stratum chart admits no integral section");
    s.col(i) = *x;
  }
  section_cache_[sed] = s;
  return s;
}

IntMat TropicalComplex::transition(const std::vector<int>& from,
                                   const std::vector<int>& to) const {
  if (!contains_all(to, from))
    throw validation_error("transition requires nested sedentarities");
  return chart(to) * chart_section(from);
}

int TropicalComplex::index_of(const std::vector<int>& sed,
                              const std::vector<int>& dual) const {
  auto it = index_.find({sed, dual});
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> TropicalComplex::cells_of_dim(int d) const {
  std::vector<int> out;
  for (size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == d) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> TropicalComplex::cells_with_sed(const std::vector<int>& sed) const {
  std::vector<int> out;
  for (size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].sed == sed) out.push_back(static_cast<int>(i));
  return out;
}

bool TropicalComplex::is_face(int a, int b) const {
  const Cell& fa = cells_[static_cast<size_t>(a)];
  const Cell& fb = cells_[static_cast<size_t>(b)];
  return contains_all(fa.sed, fb.sed) && contains_all(fa.dual, fb.dual);
}

std::vector<int> TropicalComplex::closed_star(int tau) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_face(tau, i)) out.push_back(i);
  return out;
}

RatVec TropicalComplex::relint_point(int cell) const {
  const Cell& c = cells_[static_cast<size_t>(cell)];
  RatVec p = RatVec::Zero(c.vertices.rows());
  for (Eigen::Index j = 0; j < c.vertices.cols(); ++j) p += c.vertices.col(j);
  p /= Rat(static_cast<int>(c.vertices.cols()));
  for (Eigen::Index j = 0; j < c.rays.cols(); ++j) p += to_rat(IntVec(c.rays.col(j)));
  return p;
}

Position TropicalComplex::position(int cell, const RatVec& y) const {
  const Cell& c = cells_[static_cast<size_t>(cell)];
  MembershipData md{c.eq, c.eq_rhs, c.ineq};
  return poly_position(md, y);
}

int TropicalComplex::locate(const std::vector<int>& sed, const RatVec& y) const {
  for (int i = 0; i < size(); ++i) {
    if (cells_[static_cast<size_t>(i)].sed != sed) continue;
    if (position(i, y) == Position::interior) return i;
  }
  return -1;
}

int TropicalComplex::ray_of_direction(int cell, const IntVec& dir) const {
  const Cell& c = cells_[static_cast<size_t>(cell)];
  IntVec p = primitive(dir);
  for (size_t j = 0; j < c.ray_ids.size(); ++j)
    if (is_zero(IntVec(IntVec(c.rays.col(static_cast<Eigen::Index>(j))) - p)))
      return c.ray_ids[j];
  return -1;
}

TropicalComplex build_variety(const TropicalPolynomial& f, const Ambient& amb) {
  if (f.vars() != amb.n)
    throw validation_error("polynomial arity does not match the ambient");
  const int n = amb.n;
  Subdivision sub = dual_subdivision(f);
  TropicalComplex x(amb, f, std::move(sub));
  const Subdivision& s = x.sub_;

  auto npPts = to_rat_pts(s.points);
  if (affine_dim(npPts) != n)
    throw validation_error("support polytope is not full-dimensional");
  {
    std::set<std::vector<long>> want, got;
    for (const auto& r : amb.rays) want.insert(to_longs(r));
    for (const auto& fc : polytope_facets(npPts)) {
      IntVec nu(n);
      for (int i = 0; i < n; ++i) nu(i) = num(fc.normal(i));
      got.insert(to_longs(primitive(nu)));
    }
    if (want != got)
      throw validation_error("support polytope's normal fan differs from the ambient fan");
  }

  // support points on the maximizing face of each ambient ray
  std::vector<std::vector<int>> maxface(amb.rays.size());
  for (size_t r = 0; r < amb.rays.size(); ++r) {
    RatVec u = to_rat(amb.rays[r]);
    Rat best;
    std::vector<Rat> vals;
    for (size_t i = 0; i < npPts.size(); ++i) {
      vals.push_back(u.dot(npPts[i]));
      if (i == 0 || vals.back() > best) best = vals.back();
    }
    for (size_t i = 0; i < npPts.size(); ++i)
      if (vals[i] == best) maxface[r].push_back(static_cast<int>(i));
  }

  // ambient rays compatible with each subdivision cell
  std::vector<std::vector<int>> cellRays(s.cells.size());
  for (size_t w = 0; w < s.cells.size(); ++w)
    for (size_t r = 0; r < amb.rays.size(); ++r)
      if (contains_all(maxface[r], s.cells[w].support))
        cellRays[w].push_back(static_cast<int>(r));

  // enumerate cells: every fan cone inside the ray set of a positive-
  // dimensional subdivision cell
  std::vector<std::pair<std::vector<int>, int>> raw;
  for (size_t w = 0; w < s.cells.size(); ++w) {
    if (s.cells[w].dim < 1) continue;
    for (const auto& c : amb.cones)
      if (contains_all(cellRays[w], c)) raw.push_back({c, static_cast<int>(w)});
  }
  std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return s.cells[static_cast<size_t>(a.second)].support <
           s.cells[static_cast<size_t>(b.second)].support;
  });

  // per-stratum dual data: exponents in chart coordinates and the dual
  // vertices of the stratum-top cells
  struct StratumData {
    IntMat p;
    std::vector<int> facePts;
    std::map<int, IntVec> m;
    std::map<int, RatVec> topVertex;  // subdivision cell -> chart position
  };
  std::map<std::vector<int>, StratumData> strata;
  auto stratum = [&](const std::vector<int>& c) -> StratumData& {
    auto it = strata.find(c);
    if (it != strata.end()) return it->second;
    StratumData d;
    d.p = x.chart(c);
    d.facePts.resize(s.points.size());
    for (size_t i = 0; i < s.points.size(); ++i) d.facePts[i] = static_cast<int>(i);
    for (int r : c) {
      std::vector<int> keep;
      std::set_intersection(d.facePts.begin(), d.facePts.end(), maxface[static_cast<size_t>(r)].begin(),
                            maxface[static_cast<size_t>(r)].end(), std::back_inserter(keep));
      d.facePts = keep;
    }
    if (d.facePts.empty()) throw validation_error("stratum has empty support");
    const IntVec& base = s.points[static_cast<size_t>(d.facePts[0])];
    for (int i : d.facePts) {
      auto m = solve_int(IntMat(d.p.transpose()), IntVec(s.points[static_cast<size_t>(i)] - base));
      if (!m) throw validation_error("stratum exponent is not integral");
      d.m[i] = *m;
    }
    const int sd = x.chart_dim(c);
    for (size_t t = 0; t < s.cells.size(); ++t) {
      const auto& wc = s.cells[t];
      if (wc.dim != sd || !contains_all(d.facePts, wc.support)) continue;
      const int k = static_cast<int>(wc.support.size());
      RatMat a(k - 1, sd);
      RatVec b(k - 1);
      const IntVec& m0 = d.m[wc.support[0]];
      const Rat& a0 = x.poly_.coefficients()[static_cast<size_t>(wc.support[0])];
      for (int i = 1; i < k; ++i) {
        a.row(i - 1) = to_rat(IntVec(d.m[wc.support[static_cast<size_t>(i)]] - m0)).transpose();
        b(i - 1) = a0 - x.poly_.coefficients()[static_cast<size_t>(wc.support[static_cast<size_t>(i)])];
      }
      if (rank_rat(a) != sd)
        throw validation_error("degenerate stratum-top cell");
      auto y = solve_rat(a, b);
      if (!y) throw validation_error("inconsistent dual vertex system");
      d.topVertex[static_cast<int>(t)] = *y;
    }
    return strata.emplace(c, std::move(d)).first->second;
  };

  // geometry
  for (const auto& [sed, w] : raw) {
    const auto& wc = s.cells[static_cast<size_t>(w)];
    StratumData& sd = stratum(sed);
    Cell cell;
    cell.sed = sed;
    cell.dual = wc.support;
    cell.dim = n - static_cast<int>(sed.size()) - wc.dim;

    std::vector<RatVec> verts;
    for (const auto& [t, v] : sd.topVertex)
      if (contains_all(s.cells[static_cast<size_t>(t)].support, wc.support)) verts.push_back(v);
    if (verts.empty()) throw validation_error("cell with no vertices");
    cell.vertices.resize(x.chart_dim(sed), static_cast<int>(verts.size()));
    for (size_t j = 0; j < verts.size(); ++j) cell.vertices.col(static_cast<Eigen::Index>(j)) = verts[j];

    for (int r : cellRays[static_cast<size_t>(w)]) {
      if (std::find(sed.begin(), sed.end(), r) != sed.end()) continue;
      cell.ray_ids.push_back(r);
    }
    cell.rays.resize(x.chart_dim(sed), static_cast<int>(cell.ray_ids.size()));
    for (size_t j = 0; j < cell.ray_ids.size(); ++j)
      cell.rays.col(static_cast<Eigen::Index>(j)) =
          primitive(IntVec(sd.p * amb.rays[static_cast<size_t>(cell.ray_ids[j])]));

    const int nv = static_cast<int>(cell.vertices.cols());
    const int nr = static_cast<int>(cell.rays.cols());
    IntMat dirs(x.chart_dim(sed), std::max(0, nv - 1) + nr);
    for (int j = 1; j < nv; ++j)
      dirs.col(j - 1) = primitive(RatVec(cell.vertices.col(j) - cell.vertices.col(0)));
    for (int j = 0; j < nr; ++j) dirs.col(nv - 1 + j) = cell.rays.col(j);
    cell.tangent = hermite_basis(saturation(dirs));
    if (static_cast<int>(cell.tangent.cols()) != cell.dim)
      throw validation_error("cell dimension mismatch");

    MembershipData md = membership_data(cell.vertices, to_rat(cell.rays));
    cell.eq = md.eq;
    cell.eq_rhs = md.rhs;
    cell.ineq = md.ineq;

    x.index_[{cell.sed, cell.dual}] = static_cast<int>(x.cells_.size());
    x.cells_.push_back(std::move(cell));
  }
  for (const auto& c : x.cells_) x.dim_ = std::max(x.dim_, c.dim);

  // subdivision cells covering a given one
  std::vector<std::vector<int>> coveredBy(s.cells.size());
  for (size_t w = 0; w < s.cells.size(); ++w)
    for (int fc : s.cells[w].faces) coveredBy[static_cast<size_t>(fc)].push_back(static_cast<int>(w));

  auto sign_of = [](const Rat& d) {
    if (d == 0) throw validation_error("degenerate incidence determinant");
    return d > 0 ? 1 : -1;
  };

  for (size_t i = 0; i < x.cells_.size(); ++i) {
    Cell& sigma = x.cells_[i];
    if (sigma.dim == 0) continue;
    const int w = s.index_of(sigma.dual);
    RatMat bsig = to_rat(sigma.tangent);
    RatVec psig = x.relint_point(static_cast<int>(i));

    // facets in the same stratum: duals covering W
    for (int w2 : coveredBy[static_cast<size_t>(w)]) {
      if (!contains_all(cellRays[static_cast<size_t>(w2)], sigma.sed)) continue;
      int j = x.index_of(sigma.sed, s.cells[static_cast<size_t>(w2)].support);
      if (j < 0) throw validation_error("missing same-stratum facet");
      const Cell& tau = x.cells_[static_cast<size_t>(j)];
      RatMat m(bsig.rows(), sigma.dim);
      m.col(0) = x.relint_point(j) - psig;
      m.rightCols(tau.dim) = to_rat(tau.tangent);
      auto coords = solve_rat(bsig, m);
      if (!coords) throw validation_error("facet tangent not inside the cell tangent");
      Eigen::FullPivLU<RatMat> lu(*coords);
      sigma.facets.push_back(j);
      sigma.facet_signs.push_back(sign_of(lu.determinant()));
    }

    // facets at infinity: one per remaining applicable ray
    for (size_t rj = 0; rj < sigma.ray_ids.size(); ++rj) {
      int r = sigma.ray_ids[rj];
      std::vector<int> sed2 = with_ray(sigma.sed, r);
      if (!amb.has_cone(sed2)) continue;
      int j = x.index_of(sed2, sigma.dual);
      if (j < 0) throw validation_error("missing facet at infinity");
      const Cell& tau = x.cells_[static_cast<size_t>(j)];
      IntMat q = x.transition(sigma.sed, sed2);
      auto y = solve_rat(to_rat(IntMat(q * sigma.tangent)), to_rat(tau.tangent));
      if (!y) throw validation_error("facet tangent does not lift through the quotient");
      RatMat m(bsig.rows(), sigma.dim);
      m.col(0) = to_rat(IntVec(sigma.rays.col(static_cast<Eigen::Index>(rj))));
      m.rightCols(tau.dim) = bsig * *y;
      auto coords = solve_rat(bsig, m);
      if (!coords) throw validation_error("infinity facet frame not inside the cell tangent");
      Eigen::FullPivLU<RatMat> lu(*coords);
      sigma.facets.push_back(j);
      sigma.facet_signs.push_back(sign_of(lu.determinant()));
    }
  }
  return x;
}

IntVec primitive_normal(const TropicalComplex& x, int sigma, int tau) {
  const Cell& cs = x.cell(sigma);
  const Cell& ct = x.cell(tau);
  if (cs.sed != ct.sed || cs.dim != ct.dim + 1 || !x.is_face(tau, sigma))
    throw validation_error("primitive_normal expects a same-stratum facet");
  const int k = cs.dim;
  IntMat c(k, ct.dim);
  for (int j = 0; j < ct.dim; ++j) {
    auto col = solve_int(cs.tangent, IntVec(ct.tangent.col(j)));
    if (!col) throw validation_error("facet lattice not inside the cell lattice");
    c.col(j) = *col;
  }
  SNFResult snf = smith_normal_form(c);
  for (const Int& d : snf.diagonal)
    if (d != 1) throw validation_error("facet lattice is not saturated in the cell lattice");
  IntMat f = cs.tangent * snf.Uinv;
  IntVec gen = f.col(k - 1);

  RatVec mu = x.relint_point(sigma) - x.relint_point(tau);
  auto coords = solve_rat(to_rat(cs.tangent), mu);
  if (!coords) throw validation_error("relative interior drift leaves the tangent space");
  RatVec adapted = to_rat(snf.U) * *coords;
  if (adapted(k - 1) == 0) throw validation_error("normal direction is tangent to the facet");
  if (adapted(k - 1) < 0) gen = -gen;
  return gen;
}

void validate_cw(const TropicalComplex& x) {
  for (int i = 0; i < x.size(); ++i) {
    const Cell& sigma = x.cell(i);
    std::set<int> distinct(sigma.facets.begin(), sigma.facets.end());
    if (distinct.size() != sigma.facets.size())
      throw validation_error("repeated facet");
    for (int j : sigma.facets) {
      const Cell& tau = x.cell(j);
      if (tau.dim != sigma.dim - 1 || !x.is_face(j, i))
        throw validation_error("facet is not a codimension-one face");
      if (tau.sed == sigma.sed) {
        for (Eigen::Index v = 0; v < tau.vertices.cols(); ++v)
          if (x.position(i, RatVec(tau.vertices.col(v))) == Position::outside)
            throw validation_error("facet vertex escapes the cell");
        for (Eigen::Index rj = 0; rj < tau.rays.cols(); ++rj) {
          if (sigma.rays.cols() == 0)
            throw validation_error("facet ray on a bounded cell");
          auto lambda = solve_rat(to_rat(sigma.rays), to_rat(IntVec(tau.rays.col(rj))));
          if (!lambda) throw validation_error("facet ray outside the recession cone");
          for (Eigen::Index t = 0; t < lambda->size(); ++t)
            if ((*lambda)(t) < 0)
              throw validation_error("facet ray outside the recession cone");
        }
      } else {
        IntMat q = x.transition(sigma.sed, tau.sed);
        RatMat verts = to_rat(q) * sigma.vertices;
        std::vector<int> keep;
        IntMat qr = q * sigma.rays;
        for (Eigen::Index c = 0; c < qr.cols(); ++c)
          if (!is_zero(IntVec(qr.col(c)))) keep.push_back(static_cast<int>(c));
        RatMat rays(q.rows(), static_cast<int>(keep.size()));
        for (size_t c = 0; c < keep.size(); ++c)
          rays.col(static_cast<Eigen::Index>(c)) = to_rat(IntVec(qr.col(keep[c])));
        MembershipData md = membership_data(verts, rays);
        for (Eigen::Index v = 0; v < tau.vertices.cols(); ++v)
          if (poly_position(md, RatVec(tau.vertices.col(v))) == Position::outside)
            throw validation_error("infinity facet vertex escapes the quotient image");
        if (poly_position(md, x.relint_point(j)) == Position::outside)
          throw validation_error("infinity facet escapes the quotient image");
      }
    }
  }

  // boundary of boundary vanishes with constant coefficients
  for (int q = 1; q + 1 <= x.dim(); ++q) {
    auto rows = x.cells_of_dim(q - 1), mid = x.cells_of_dim(q), cols = x.cells_of_dim(q + 1);
    std::map<int, int> rowPos, midPos;
    for (size_t k = 0; k < rows.size(); ++k) rowPos[rows[k]] = static_cast<int>(k);
    for (size_t k = 0; k < mid.size(); ++k) midPos[mid[k]] = static_cast<int>(k);
    IntMat d1 = IntMat::Zero(static_cast<int>(rows.size()), static_cast<int>(mid.size()));
    IntMat d2 = IntMat::Zero(static_cast<int>(mid.size()), static_cast<int>(cols.size()));
    for (size_t k = 0; k < mid.size(); ++k) {
      const Cell& c = x.cell(mid[k]);
      for (size_t t = 0; t < c.facets.size(); ++t)
        d1(rowPos[c.facets[t]], static_cast<int>(k)) = c.facet_signs[t];
    }
    for (size_t k = 0; k < cols.size(); ++k) {
      const Cell& c = x.cell(cols[k]);
      for (size_t t = 0; t < c.facets.size(); ++t)
        d2(midPos[c.facets[t]], static_cast<int>(k)) = c.facet_signs[t];
    }
    if (!is_zero(IntMat(d1 * d2)))
      throw validation_error("boundary of boundary is nonzero");
  }
}

void check_balancing(const TropicalComplex& x) {
  std::set<std::vector<int>> seds;
  for (const auto& c : x.cells()) seds.insert(c.sed);
  for (const auto& sed : seds) {
    const int top = x.chart_dim(sed) - 1;
    if (top < 1) continue;
    for (int tau : x.cells_with_sed(sed)) {
      if (x.cell(tau).dim != top - 1) continue;
      IntVec total = IntVec::Zero(x.chart_dim(sed));
      for (int sigma : x.cells_with_sed(sed)) {
        if (x.cell(sigma).dim != top || !x.is_face(tau, sigma)) continue;
        total += primitive_normal(x, sigma, tau);
      }
      if (!solve_int(x.cell(tau).tangent, total))
        throw validation_error("balancing fails");
    }
  }
}

std::vector<int> closure_cells(const TropicalComplex& x, const std::vector<int>& seed) {
  std::set<int> out;
  for (int s : seed)
    for (int i = 0; i < x.size(); ++i)
      if (x.is_face(i, s)) out.insert(i);
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace trop
