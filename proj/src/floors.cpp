#include "trop/floors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "trop/lattice.hpp"

namespace trop {

namespace {

Rat cross2(const RatVec& a, const RatVec& b) { return a(0) * b(1) - a(1) * b(0); }
Rat dot2(const RatVec& a, const RatVec& b) { return a(0) * b(0) + a(1) * b(1); }

bool same_point(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool lex_point_less(const RatVec& a, const RatVec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

struct SegGeom {
  RatVec base;
  RatVec dir;
  bool bounded = true;
};

SegGeom seg_of(const TropicalComplex& c, int id) {
  const Cell& e = c.cell(id);
  if (e.vertices.cols() == 2)
    return {RatVec(e.vertices.col(0)), RatVec(e.vertices.col(1) - e.vertices.col(0)), true};
  if (e.vertices.cols() == 1 && e.rays.cols() == 1) {
    RatVec d(2);
    d << Rat(e.rays(0, 0)), Rat(e.rays(1, 0));
    return {RatVec(e.vertices.col(0)), d, false};
  }
  throw validation_error("seg_of: unexpected edge geometry");
}

enum class Meet { none, transversal, touch, overlap };

// How two parametrized edges meet; fills the point for a transversal crossing.
Meet meet_edges(const SegGeom& a, const SegGeom& b, RatVec* point) {
  RatVec delta = b.base - a.base;
  Rat det = cross2(a.dir, b.dir);
  if (det == 0) {
    if (cross2(delta, a.dir) != 0) return Meet::none;
    // collinear: intersect the parameter ranges along the first edge
    Rat len = dot2(a.dir, a.dir);
    Rat t0 = dot2(delta, a.dir) / len;
    Rat blo = t0, bhi = t0;
    bool blo_inf = false, bhi_inf = false;
    if (b.bounded) {
      Rat t1 = t0 + dot2(b.dir, a.dir) / len;
      if (t1 < blo) blo = t1;
      if (t1 > bhi) bhi = t1;
    } else if (dot2(b.dir, a.dir) > 0) {
      bhi_inf = true;
    } else {
      blo_inf = true;
    }
    Rat lo = blo_inf ? Rat(0) : std::max(Rat(0), blo);
    bool up_inf = !a.bounded && bhi_inf;
    if (up_inf) return Meet::overlap;
    Rat hi(0);
    if (a.bounded && !bhi_inf) hi = std::min(Rat(1), bhi);
    else if (a.bounded) hi = Rat(1);
    else hi = bhi;
    if (lo > hi) return Meet::none;
    if (lo == hi) return Meet::touch;
    return Meet::overlap;
  }
  Rat t = cross2(delta, b.dir) / det;
  Rat s = cross2(delta, a.dir) / det;
  if (t < 0 || (a.bounded && t > 1)) return Meet::none;
  if (s < 0 || (b.bounded && s > 1)) return Meet::none;
  if (t == 0 || (a.bounded && t == 1) || s == 0 || (b.bounded && s == 1)) return Meet::touch;
  *point = a.base + t * a.dir;
  return Meet::transversal;
}

std::vector<int> curve_edges(const TropicalComplex& c) {
  std::vector<int> out;
  for (int i : c.cells_of_dim(1))
    if (c.cell(i).sed.empty()) out.push_back(i);
  return out;
}

// Interior transversal meeting points only, silently skipping everything else.
std::vector<RatVec> lenient_crossing_points(const TropicalComplex& a, const TropicalComplex& b) {
  std::vector<RatVec> out;
  for (int ea : curve_edges(a))
    for (int eb : curve_edges(b)) {
      RatVec p(2);
      if (meet_edges(seg_of(a, ea), seg_of(b, eb), &p) == Meet::transversal) out.push_back(p);
    }
  return out;
}

}  // namespace

std::vector<Crossing> curve_crossings(const TropicalComplex& low, const TropicalComplex& high) {
  std::vector<Crossing> out;
  for (int el : curve_edges(low))
    for (int eh : curve_edges(high)) {
      SegGeom a = seg_of(low, el), b = seg_of(high, eh);
      RatVec p(2);
      switch (meet_edges(a, b, &p)) {
        case Meet::none:
          break;
        case Meet::touch:
          throw input_error("curve_crossings: curves meet at an edge endpoint");
        case Meet::overlap:
          throw input_error("curve_crossings: curves share a segment");
        case Meet::transversal: {
          IntVec u = primitive(a.dir), v = primitive(b.dir);
          Int d = u(0) * v(1) - u(1) * v(0);
          if (d != 1 && d != -1) throw input_error("curve_crossings: non-unimodular crossing");
          out.push_back({p, el, eh});
          break;
        }
      }
    }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    return lex_point_less(a.point, b.point);
  });
  for (size_t i = 1; i < out.size(); ++i)
    if (same_point(out[i].point, out[i - 1].point))
      throw input_error("curve_crossings: coincident crossing points");
  return out;
}

bool is_floor_decomposed(const TropicalPolynomial& f) {
  if (f.vars() != 3) throw input_error("is_floor_decomposed: expects three variables");
  Subdivision s = dual_subdivision(f);
  if (s.top_dim != 3) return false;
  if (!is_primitive(s).primitive) return false;
  int d = f.degree();
  if (static_cast<long>(s.top_cells().size()) != static_cast<long>(d) * d * d) return false;
  for (int k = 1; k <= d; ++k) {
    Int level(d - k);
    Int area(0);
    for (const DualCell& w : s.cells) {
      if (w.dim != 2) continue;
      bool flat = true;
      for (int pi : w.support)
        if (s.points[static_cast<size_t>(pi)](2) != level) flat = false;
      if (!flat) continue;
      if (w.support.size() != 3) return false;
      std::vector<IntVec> pts2;
      for (int pi : w.support) {
        IntVec q(2);
        q << s.points[static_cast<size_t>(pi)](0), s.points[static_cast<size_t>(pi)](1);
        pts2.push_back(q);
      }
      if (normalized_volume(pts2) != 1) return false;
      area += 1;
    }
    if (area != Int(k) * Int(k)) return false;
  }
  return true;
}

FloorPlan floor_plan(const TropicalPolynomial& f) {
  if (!is_floor_decomposed(f)) throw input_error("floor_plan: surface is not floor decomposed");
  int d = f.degree();
  std::vector<TropicalPolynomial> curves;
  for (int k = 1; k <= d; ++k) curves.push_back(restrict_to_level(f, d - k));
  return plan_from_curves(std::move(curves));
}

FloorPlan plan_from_curves(std::vector<TropicalPolynomial> curves) {
  FloorPlan p;
  p.degree = static_cast<int>(curves.size());
  if (p.degree == 0) throw input_error("plan_from_curves: no curves");
  for (int k = 1; k <= p.degree; ++k) {
    const TropicalPolynomial& c = curves[static_cast<size_t>(k) - 1];
    if (c.vars() != 2 || c.degree() != k)
      throw input_error("plan_from_curves: curve " + std::to_string(k) + " has the wrong degree");
    p.complexes.push_back(build_variety(c, projective_ambient(2)));
  }
  p.curves = std::move(curves);
  for (int k = 1; k <= p.degree - 1; ++k) {
    auto cr = curve_crossings(p.complexes[static_cast<size_t>(k) - 1],
                              p.complexes[static_cast<size_t>(k)]);
    if (static_cast<int>(cr.size()) != k * (k + 1))
      throw input_error("plan_from_curves: expected " + std::to_string(k * (k + 1)) +
                        " crossings between curves " + std::to_string(k) + " and " +
                        std::to_string(k + 1));
    p.crossings.push_back(std::move(cr));
  }
  for (size_t k = 1; k < p.crossings.size(); ++k)
    for (const Crossing& a : p.crossings[k - 1])
      for (const Crossing& b : p.crossings[k])
        if (same_point(a.point, b.point))
          throw input_error("plan_from_curves: crossing point shared by three curves");
  return p;
}

namespace {

TropicalPolynomial assemble_surface(const FloorPlan& plan, const std::vector<Rat>& b) {
  int d = plan.degree;
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  IntVec apex(3);
  apex << 0, 0, d;
  exps.push_back(apex);
  coefs.push_back(b[0]);
  for (int i = 1; i <= d; ++i) {
    const TropicalPolynomial& fi = plan.curves[static_cast<size_t>(i) - 1];
    for (int t = 0; t < fi.terms(); ++t) {
      IntVec e(3);
      e << fi.exponents()[static_cast<size_t>(t)](0), fi.exponents()[static_cast<size_t>(t)](1),
          d - i;
      exps.push_back(e);
      coefs.push_back(b[static_cast<size_t>(i)] + fi.coefficients()[static_cast<size_t>(t)]);
    }
  }
  return TropicalPolynomial(std::move(exps), std::move(coefs));
}

Int ceil_rat(const Rat& r) { return -fdiv(-num(r), den(r)); }

// Evaluation points for the wall-height bound at wall j: the finite vertices
// of the adjacent curves plus their pairwise transversal meetings.
std::vector<RatVec> wall_bound_candidates(const FloorPlan& plan, int j) {
  std::vector<int> idx;
  for (int k : {j - 1, j, j + 1})
    if (k >= 1 && k <= plan.degree) idx.push_back(k);
  std::vector<RatVec> pts;
  for (int k : idx)
    for (int v : plan.complexes[static_cast<size_t>(k) - 1].cells_of_dim(0)) {
      const Cell& c = plan.complexes[static_cast<size_t>(k) - 1].cell(v);
      if (c.sed.empty()) pts.push_back(RatVec(c.vertices.col(0)));
    }
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      auto more = lenient_crossing_points(plan.complexes[static_cast<size_t>(idx[a]) - 1],
                                          plan.complexes[static_cast<size_t>(idx[b]) - 1]);
      pts.insert(pts.end(), more.begin(), more.end());
    }
  return pts;
}

}  // namespace

TropicalPolynomial surface_from_floor_plan(const FloorPlan& plan, const std::vector<Rat>& heights) {
  if (static_cast<int>(heights.size()) != plan.degree + 1)
    throw input_error("surface_from_floor_plan: need one height per level");
  TropicalPolynomial f = assemble_surface(plan, heights);
  if (!is_floor_decomposed(f))
    throw input_error("surface_from_floor_plan: heights do not give a floor decomposed surface");
  return f;
}

TropicalPolynomial surface_from_floor_plan(const FloorPlan& plan) {
  int d = plan.degree;
  // Convexity defect of the curve stack at each wall; the gap sequence must
  // outgrow it for the wall to have positive height everywhere.
  std::vector<Int> bump(static_cast<size_t>(d) + 1, Int(0));
  for (int j = 1; j <= d - 1; ++j) {
    Rat worst(0);
    for (const RatVec& p : wall_bound_candidates(plan, j)) {
      Rat lo = j >= 2 ? plan.curves[static_cast<size_t>(j) - 2].evaluate(p) : Rat(0);
      Rat mid = plan.curves[static_cast<size_t>(j) - 1].evaluate(p);
      Rat hi = plan.curves[static_cast<size_t>(j)].evaluate(p);
      Rat v = lo + hi - 2 * mid;
      if (v > worst) worst = v;
    }
    if (worst > 0) bump[static_cast<size_t>(j)] = ceil_rat(worst);
  }
  Int pad(1);
  for (int attempt = 0; attempt < 10; ++attempt, pad *= 2) {
    std::vector<Rat> gap(static_cast<size_t>(d), Rat(0));
    gap[0] = Rat(pad);
    for (int j = 1; j <= d - 1; ++j)
      gap[static_cast<size_t>(j)] =
          gap[static_cast<size_t>(j) - 1] + Rat(bump[static_cast<size_t>(j)]) + Rat(pad);
    std::vector<Rat> b(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = d - 1; i >= 0; --i)
      b[static_cast<size_t>(i)] = b[static_cast<size_t>(i) + 1] + gap[static_cast<size_t>(i)];
    TropicalPolynomial f = assemble_surface(plan, b);
    if (is_floor_decomposed(f)) return f;
  }
  throw validation_error("surface_from_floor_plan: height scheduler failed");
}

TropicalComplex graph_modification(const TropicalPolynomial& top, const TropicalPolynomial& bottom) {
  if (top.vars() != 2 || bottom.vars() != 2)
    throw input_error("graph_modification: expects plane curves");
  int d = top.degree();
  if (bottom.degree() != d - 1)
    throw input_error("graph_modification: degrees must be consecutive");
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  for (int t = 0; t < top.terms(); ++t) {
    IntVec e(3);
    e << top.exponents()[static_cast<size_t>(t)](0), top.exponents()[static_cast<size_t>(t)](1), 0;
    exps.push_back(e);
    coefs.push_back(top.coefficients()[static_cast<size_t>(t)]);
  }
  for (int t = 0; t < bottom.terms(); ++t) {
    IntVec e(3);
    e << bottom.exponents()[static_cast<size_t>(t)](0),
        bottom.exponents()[static_cast<size_t>(t)](1), 1;
    exps.push_back(e);
    coefs.push_back(bottom.coefficients()[static_cast<size_t>(t)]);
  }
  TropicalPolynomial f(std::move(exps), std::move(coefs));

  std::vector<IntVec> verts;
  std::set<std::vector<long>> seen;
  auto add = [&](long a, long b, long c) {
    IntVec v(3);
    v << a, b, c;
    if (seen.insert(to_longs(v)).second) verts.push_back(v);
  };
  add(0, 0, 0);
  add(d, 0, 0);
  add(0, d, 0);
  add(d - 1, 0, 1);
  add(0, d - 1, 1);
  add(0, 0, 1);
  return build_variety(f, polytope_ambient(verts));
}

CurveSkeleton curve_breaking_points(const TropicalComplex& curve, const std::vector<RatVec>& avoid) {
  std::vector<int> verts;
  std::map<int, int> vidx;
  for (int i : curve.cells_of_dim(0))
    if (curve.cell(i).sed.empty()) {
      vidx[i] = static_cast<int>(verts.size());
      verts.push_back(i);
    }
  struct Arc {
    int cell;
    int a, b;  // vertex slots in cell-column order
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(verts.size());  // arc indices
  for (int e : curve_edges(curve)) {
    const Cell& c = curve.cell(e);
    if (c.vertices.cols() != 2) continue;
    int a = -1, b = -1;
    for (int f : c.facets) {
      const Cell& fc = curve.cell(f);
      if (!fc.sed.empty()) continue;
      if (same_point(RatVec(fc.vertices.col(0)), RatVec(c.vertices.col(0)))) a = f;
      if (same_point(RatVec(fc.vertices.col(0)), RatVec(c.vertices.col(1)))) b = f;
    }
    if (a < 0 || b < 0) throw validation_error("curve_breaking_points: edge endpoints missing");
    int id = static_cast<int>(arcs.size());
    arcs.push_back({e, vidx.at(a), vidx.at(b)});
    adj[static_cast<size_t>(vidx.at(a))].push_back(id);
    adj[static_cast<size_t>(vidx.at(b))].push_back(id);
  }
  for (auto& l : adj)
    std::sort(l.begin(), l.end(), [&](int x, int y) {
      return arcs[static_cast<size_t>(x)].cell < arcs[static_cast<size_t>(y)].cell;
    });

  if (verts.empty()) throw input_error("curve_breaking_points: curve has no finite vertex");
  auto pos_of = [&](int vi) {
    return RatVec(curve.cell(verts[static_cast<size_t>(vi)]).vertices.col(0));
  };
  // root at the lexicographically least position, preferring leaves
  int root = -1;
  bool root_leaf = false;
  for (size_t i = 0; i < verts.size(); ++i) {
    bool leaf = adj[i].size() == 1;
    if (root < 0 || (leaf && !root_leaf)) {
      root = static_cast<int>(i);
      root_leaf = leaf;
    } else if (leaf == root_leaf && lex_point_less(pos_of(static_cast<int>(i)), pos_of(root))) {
      root = static_cast<int>(i);
    }
  }

  std::vector<char> seen_v(verts.size(), 0), in_tree(arcs.size(), 0), used(arcs.size(), 0);
  std::vector<int> stack = {root};
  seen_v[static_cast<size_t>(root)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int aid : adj[static_cast<size_t>(u)]) {
      if (used[static_cast<size_t>(aid)]) continue;
      used[static_cast<size_t>(aid)] = 1;
      const Arc& arc = arcs[static_cast<size_t>(aid)];
      int w = arc.a == u ? arc.b : arc.a;
      if (!seen_v[static_cast<size_t>(w)]) {
        seen_v[static_cast<size_t>(w)] = 1;
        in_tree[static_cast<size_t>(aid)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (char s : seen_v)
    if (!s) throw validation_error("curve_breaking_points: finite graph is disconnected");

  CurveSkeleton out;
  std::vector<int> breaking;
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (in_tree[i]) out.tree_edges.push_back(arcs[i].cell);
    else breaking.push_back(static_cast<int>(i));
  }
  out.genus = static_cast<int>(breaking.size());

  std::vector<std::vector<std::pair<int, int>>> tadj(verts.size());  // (arc id, far end)
  for (size_t i = 0; i < arcs.size(); ++i)
    if (in_tree[i]) {
      tadj[static_cast<size_t>(arcs[i].a)].push_back({static_cast<int>(i), arcs[i].b});
      tadj[static_cast<size_t>(arcs[i].b)].push_back({static_cast<int>(i), arcs[i].a});
    }

  for (int bid : breaking) {
    const Arc& arc = arcs[static_cast<size_t>(bid)];
    const Cell& c = curve.cell(arc.cell);
    BreakingPoint bp;
    bp.edge = arc.cell;
    RatVec u(c.vertices.col(0)), v(c.vertices.col(1));
    bp.framing = primitive(RatVec(v - u));
    // first proper fraction along the edge that avoids the marked points
    bool placed = false;
    for (int q = 2; q <= 64 && !placed; ++q)
      for (int pnum = 1; pnum < q && !placed; ++pnum) {
        if (std::gcd(pnum, q) != 1) continue;
        RatVec cand = u + (Rat(pnum) / Rat(q)) * (v - u);
        bool clash = false;
        for (const RatVec& a : avoid)
          if (same_point(a, cand)) clash = true;
        if (!clash) {
          bp.point = cand;
          placed = true;
        }
      }
    if (!placed) throw validation_error("curve_breaking_points: no free point on the edge");

    // close the loop: breaking edge forward, then the tree path back
    std::vector<int> par_arc(verts.size(), -1), par_v(verts.size(), -1);
    std::vector<int> bfs = {arc.a};
    std::vector<char> vis(verts.size(), 0);
    vis[static_cast<size_t>(arc.a)] = 1;
    for (size_t h = 0; h < bfs.size(); ++h) {
      int x = bfs[h];
      for (auto [aid, y] : tadj[static_cast<size_t>(x)])
        if (!vis[static_cast<size_t>(y)]) {
          vis[static_cast<size_t>(y)] = 1;
          par_arc[static_cast<size_t>(y)] = aid;
          par_v[static_cast<size_t>(y)] = x;
          bfs.push_back(y);
        }
    }
    bp.loop_edges.push_back(arc.cell);
    bp.loop_signs.push_back(1);  // traversed from endpoint 0 to endpoint 1
    int at = arc.b;
    while (at != arc.a) {
      int aid = par_arc[static_cast<size_t>(at)];
      if (aid < 0) throw validation_error("curve_breaking_points: broken tree path");
      const Arc& step = arcs[static_cast<size_t>(aid)];
      bp.loop_edges.push_back(step.cell);
      bp.loop_signs.push_back(step.a == at ? 1 : -1);
      at = par_v[static_cast<size_t>(at)];
    }
    out.points.push_back(std::move(bp));
  }
  return out;
}

FloorDecomposition floor_decomposition(const TropicalComplex& x, const FloorPlan& plan) {
  int d = plan.degree;
  FloorDecomposition fd;
  fd.degree = d;
  fd.wall_facets.assign(static_cast<size_t>(d) + 1, {});
  fd.wall_edges.assign(static_cast<size_t>(d) + 1, {});
  fd.top_rim_edges.assign(static_cast<size_t>(d) + 1, {});
  fd.bottom_rim_edges.assign(static_cast<size_t>(d) + 1, {});
  fd.floor_facets.assign(static_cast<size_t>(d), {});
  const Subdivision& s = x.subdivision();
  auto level = [&](int pi) { return s.points[static_cast<size_t>(pi)](2).convert_to<long>(); };
  for (int i = 0; i < x.size(); ++i) {
    const Cell& c = x.cell(i);
    if (!c.sed.empty()) continue;
    std::vector<long> zs;
    for (int pi : c.dual) zs.push_back(level(pi));
    if (c.dim == 2) {
      if (zs.size() != 2) throw validation_error("floor_decomposition: facet with bad dual");
      if (zs[0] == zs[1]) fd.wall_facets[static_cast<size_t>(d - zs[0])].push_back(i);
      else if (zs[0] + 1 == zs[1] || zs[1] + 1 == zs[0])
        fd.floor_facets[static_cast<size_t>(d - std::max(zs[0], zs[1]))].push_back(i);
      else
        throw validation_error("floor_decomposition: facet spans non-adjacent levels");
    } else if (c.dim == 1) {
      if (zs.size() != 3) throw validation_error("floor_decomposition: edge with bad dual");
      std::sort(zs.begin(), zs.end());
      if (zs[0] == zs[2]) fd.wall_edges[static_cast<size_t>(d - zs[0])].push_back(i);
      else if (zs[0] == zs[1] && zs[2] == zs[0] + 1)
        fd.top_rim_edges[static_cast<size_t>(d - zs[0])].push_back(i);
      else if (zs[1] == zs[2] && zs[0] == zs[1] - 1)
        fd.bottom_rim_edges[static_cast<size_t>(d - zs[2])].push_back(i);
      else
        throw validation_error("floor_decomposition: edge spans non-adjacent levels");
    }
  }

  std::map<std::vector<long>, int> pindex;
  for (size_t pi = 0; pi < s.points.size(); ++pi)
    pindex[to_longs(s.points[pi])] = static_cast<int>(pi);
  fd.lifted_crossings.assign(static_cast<size_t>(std::max(0, d - 1)), {});
  for (int k = 1; k <= d - 1; ++k) {
    const TropicalComplex& clow = plan.complexes[static_cast<size_t>(k) - 1];
    const TropicalComplex& chigh = plan.complexes[static_cast<size_t>(k)];
    for (const Crossing& cr : plan.crossings[static_cast<size_t>(k) - 1]) {
      std::vector<int> sup;
      auto push_pt = [&](const IntVec& two, long z) {
        std::vector<long> key = {two(0).convert_to<long>(), two(1).convert_to<long>(), z};
        auto it = pindex.find(key);
        if (it == pindex.end())
          throw validation_error("floor_decomposition: crossing exponent missing");
        sup.push_back(it->second);
      };
      for (int pi : clow.cell(cr.low_edge).dual)
        push_pt(clow.subdivision().points[static_cast<size_t>(pi)], d - k);
      for (int pi : chigh.cell(cr.high_edge).dual)
        push_pt(chigh.subdivision().points[static_cast<size_t>(pi)], d - k - 1);
      std::sort(sup.begin(), sup.end());
      int v = x.index_of({}, sup);
      if (v < 0 || x.cell(v).dim != 0)
        throw validation_error("floor_decomposition: crossing tetrahedron missing");
      fd.lifted_crossings[static_cast<size_t>(k) - 1].push_back(v);
    }
  }
  return fd;
}

int floor_components(const TropicalComplex& x) {
  int n = x.size();
  int nv = x.ambient().n;
  IntVec up = IntVec::Zero(nv);
  up(nv - 1) = 1;
  std::vector<char> keep(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Cell& c = x.cell(i);
    bool vertical = false;
    for (int r : c.sed) {
      const IntVec& u = x.ambient().rays[static_cast<size_t>(r)];
      bool axis = true;
      for (int k = 0; k + 1 < nv; ++k)
        if (u(k) != 0) axis = false;
      if (axis) vertical = true;  // sits on a divisor over the vertical axis
    }
    if (!vertical) {
      IntVec w = x.chart(c.sed) * up;
      if (is_zero(w)) vertical = true;
      else if (c.tangent.cols() > 0)
        vertical = solve_rat(to_rat(IntMat(c.tangent)), to_rat(w)).has_value();
    }
    keep[static_cast<size_t>(i)] = vertical ? 0 : 1;
  }
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  for (int i = 0; i < n; ++i) {
    if (!keep[static_cast<size_t>(i)]) continue;
    for (int f : x.cell(i).facets)
      if (keep[static_cast<size_t>(f)]) parent[static_cast<size_t>(find(i))] = find(f);
  }
  std::set<int> roots;
  for (int i = 0; i < n; ++i)
    if (keep[static_cast<size_t>(i)]) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

namespace {

TropicalPolynomial honeycomb_translate(int k, const Rat& t1, const Rat& t2) {
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k - a; ++b) {
      IntVec e(2);
      e << a, b;
      exps.push_back(e);
      coefs.push_back(Rat(-(a * a + b * b + a * b)) + Rat(a) * t1 + Rat(b) * t2);
    }
  return TropicalPolynomial(std::move(exps), std::move(coefs));
}

}  // namespace

FloorPlan synth_plan(int degree, unsigned seed) {
  if (degree < 1) throw input_error("synth_plan: degree must be positive");
  FloorPlan p;
  p.degree = degree;
  std::vector<Crossing> last;
  for (int k = 1; k <= degree; ++k) {
    std::mt19937 rng(seed * 2654435761u + static_cast<unsigned>(k) * 40503u + 1u);
    bool placed = false;
    for (int attempt = 0; attempt < 256 && !placed; ++attempt) {
      Rat t1 = Rat(static_cast<int>(rng() % 129) - 64) / Rat(64);
      Rat t2 = Rat(static_cast<int>(rng() % 129) - 64) / Rat(64);
      TropicalPolynomial c = honeycomb_translate(k, t1, t2);
      TropicalComplex cx = build_variety(c, projective_ambient(2));
      if (k > 1) {
        std::vector<Crossing> cr;
        try {
          cr = curve_crossings(p.complexes.back(), cx);
        } catch (const input_error&) {
          continue;
        }
        if (static_cast<int>(cr.size()) != (k - 1) * k) continue;
        bool ok = true;
        for (const Crossing& x : cr)
          for (const Crossing& a : last)
            if (same_point(a.point, x.point)) ok = false;
        if (!ok) continue;
        p.crossings.push_back(cr);
        last = std::move(cr);
      }
      p.curves.push_back(std::move(c));
      p.complexes.push_back(std::move(cx));
      placed = true;
    }
    if (!placed) throw validation_error("synth_plan: no valid translate found");
  }
  return p;
}

TropicalPolynomial synth_curve(int degree, unsigned seed) {
  return synth_plan(degree, seed).curves.back();
}

TropicalPolynomial synth_surface(int degree, unsigned seed) {
  return surface_from_floor_plan(synth_plan(degree, seed));
}

}  // namespace trop
