#include "trop/cycles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trop/lattice.hpp"

namespace trop {

namespace {

IntVec e3() {
  IntVec v = IntVec::Zero(3);
  v(2) = 1;
  return v;
}

RatVec lift3(const RatVec& xy, const Rat& z) {
  RatVec p(3);
  p(0) = xy(0);
  p(1) = xy(1);
  p(2) = z;
  return p;
}

RatVec drop_z(const RatVec& p) {
  RatVec q(2);
  q(0) = p(0);
  q(1) = p(1);
  return q;
}

bool same_pt(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool hits(const std::vector<RatVec>& pts, const RatVec& q) {
  for (const RatVec& p : pts)
    if (same_pt(p, q)) return true;
  return false;
}

Int dot2(const IntVec& a, const IntVec& b) { return a(0) * b(0) + a(1) * b(1); }

// exponent of the unique maximizing term at a smooth point
IntVec poly_grad(const TropicalPolynomial& p, const RatVec& xy) {
  std::vector<int> am = p.argmax(xy);
  if (am.size() != 1) throw validation_error("gradient probe hit a corner");
  return p.exponents()[static_cast<size_t>(am[0])];
}

// Folded floor terms of the surface polynomial: level[k] collects the terms
// of vertical degree d-k with that variable dropped.  The difference of
// consecutive levels is the altitude of one sheet of the surface, and its
// gradient jumps exactly across the two curves bounding the sheet's walls.
struct SheetGeom {
  int d = 0;
  std::vector<TropicalPolynomial> level;

  Rat alt(int s, const RatVec& xy) const {
    return level[static_cast<size_t>(s)].evaluate(xy) -
           level[static_cast<size_t>(s) - 1].evaluate(xy);
  }
  IntVec grad(int s, const RatVec& xy) const {
    return poly_grad(level[static_cast<size_t>(s)], xy) -
           poly_grad(level[static_cast<size_t>(s) - 1], xy);
  }
};

SheetGeom sheet_geom(const TropicalPolynomial& f, const FloorPlan& plan) {
  SheetGeom g;
  g.d = plan.degree;
  for (int k = 0; k <= g.d; ++k) g.level.push_back(restrict_to_level(f, g.d - k));
  return g;
}

// crossing points marked on curve j by its neighbours in the stack
std::vector<RatVec> curve_marks(const FloorPlan& plan, int j) {
  std::vector<RatVec> out;
  if (j >= 2)
    for (const Crossing& c : plan.crossings[static_cast<size_t>(j) - 2])
      out.push_back(c.point);
  if (j <= plan.degree - 1)
    for (const Crossing& c : plan.crossings[static_cast<size_t>(j) - 1])
      out.push_back(c.point);
  return out;
}

// subdivision of [a, b] at every mark interior to it
std::vector<RatVec> refine_segment(const RatVec& a, const RatVec& b,
                                   const std::vector<RatVec>& marks) {
  RatVec d = b - a;
  Eigen::Index ix = 0;
  while (ix < d.size() && d(ix) == 0) ++ix;
  if (ix == d.size()) throw input_error("degenerate route segment");
  std::vector<Rat> ts;
  for (const RatVec& m : marks) {
    if (m.size() != a.size()) continue;
    Rat t = (m(ix) - a(ix)) / d(ix);
    if (t <= 0 || t >= 1) continue;
    if (!same_pt(RatVec(a + t * d), m)) continue;
    ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<RatVec> pts;
  pts.push_back(a);
  for (const Rat& t : ts) pts.push_back(RatVec(a + t * d));
  pts.push_back(b);
  return pts;
}

ChainPiece lifted_piece(const TropicalComplex& x, const RatVec& a3, const RatVec& b3,
                        const Int& w, const IntVec& fr) {
  ChainPiece p;
  p.a = a3;
  p.b = b3;
  p.weight = w;
  p.framing = fr;
  p.host = x.locate({}, RatVec((a3 + b3) / Rat(2)));
  if (p.host < 0) throw validation_error("cycle support leaves the surface");
  return p;
}

ChainPiece ray_piece(const TropicalComplex& x, const RatVec& a3, const IntVec& dir,
                     const Int& w, const IntVec& fr) {
  ChainPiece p;
  p.a = a3;
  p.bounded = false;
  p.dir = dir;
  p.weight = w;
  p.framing = fr;
  p.host = x.locate({}, RatVec(a3 + to_rat(dir)));
  if (p.host < 0) throw validation_error("cycle support leaves the surface");
  p.limit = ray_limit(x, p.host, dir);
  return p;
}

// ---- routing along the one-skeleton of a sheet ----

struct SkelLoc {
  int edge = -1;    // 1-cell holding the point in its relative interior
  int vertex = -1;  // or the 0-cell the point coincides with
  RatVec pt;
};

struct SkelGraph {
  std::vector<int> edge_cells;                        // bounded edges by slot
  std::vector<std::array<int, 2>> edge_ends;          // vertex slots
  std::vector<int> vert_cells;                        // 0-cells by slot
  std::vector<RatVec> pos;                            // slot coordinates
  std::map<int, int> vslot;                           // 0-cell id -> slot
  std::map<int, std::vector<int>> touch;              // 1-cell id -> endpoint slots
  std::vector<std::vector<std::pair<int, int>>> adj;  // slot -> (edge slot, other)
};

SkelGraph skeleton_graph(const TropicalComplex& x, std::vector<int> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  SkelGraph g;
  auto slot_of = [&](int v) {
    auto it = g.vslot.find(v);
    if (it != g.vslot.end()) return it->second;
    int s = static_cast<int>(g.vert_cells.size());
    g.vslot.emplace(v, s);
    g.vert_cells.push_back(v);
    g.pos.push_back(x.cell(v).vertices.col(0));
    return s;
  };
  for (int e : cells) {
    const Cell& c = x.cell(e);
    std::vector<int> fin;
    for (int f : c.facets)
      if (x.cell(f).dim == 0 && x.cell(f).sed.empty()) fin.push_back(f);
    std::sort(fin.begin(), fin.end());
    std::vector<int> slots;
    for (int f : fin) slots.push_back(slot_of(f));
    g.touch.emplace(e, slots);
    if (slots.size() == 2) {
      g.edge_cells.push_back(e);
      g.edge_ends.push_back({slots[0], slots[1]});
    }
  }
  g.adj.assign(g.vert_cells.size(), {});
  for (size_t es = 0; es < g.edge_cells.size(); ++es) {
    auto [u, v] = g.edge_ends[es];
    g.adj[static_cast<size_t>(u)].push_back({static_cast<int>(es), v});
    g.adj[static_cast<size_t>(v)].push_back({static_cast<int>(es), u});
  }
  for (auto& lst : g.adj)
    std::sort(lst.begin(), lst.end(), [&](const auto& p, const auto& q) {
      return g.edge_cells[static_cast<size_t>(p.first)] <
             g.edge_cells[static_cast<size_t>(q.first)];
    });
  return g;
}

SkelLoc locate_on_skeleton(const TropicalComplex& x, const RatVec& p3) {
  int c = x.locate({}, p3);
  if (c < 0) throw validation_error("cycle support leaves the surface");
  SkelLoc loc;
  loc.pt = p3;
  if (x.cell(c).dim == 0)
    loc.vertex = c;
  else if (x.cell(c).dim == 1)
    loc.edge = c;
  else
    throw validation_error("skeleton point sits in a facet interior");
  return loc;
}

ChainPiece edge_part(int host, const RatVec& a, const RatVec& b, const Int& w,
                     const IntVec& fr) {
  ChainPiece p;
  p.host = host;
  p.a = a;
  p.b = b;
  p.weight = w;
  p.framing = fr;
  return p;
}

// shortest path between two skeleton locations; every emitted piece gets the
// same weight and framing, so the interior residues telescope away
void skeleton_walk(const SkelGraph& g, const SkelLoc& from, const SkelLoc& to,
                   const Int& w, const IntVec& fr, std::vector<ChainPiece>& out) {
  if (from.vertex >= 0 && from.vertex == to.vertex) return;
  if (from.edge >= 0 && from.edge == to.edge) {
    if (!same_pt(from.pt, to.pt)) out.push_back(edge_part(from.edge, from.pt, to.pt, w, fr));
    return;
  }
  size_t n = g.vert_cells.size();
  std::vector<int> dist(n, -1), par_edge(n, -1), par_vert(n, -1);
  std::map<int, ChainPiece> entry;
  std::vector<int> queue;
  auto seed = [&](int slot, const ChainPiece* piece) {
    if (dist[static_cast<size_t>(slot)] >= 0) return;
    dist[static_cast<size_t>(slot)] = 0;
    if (piece) entry.emplace(slot, *piece);
    queue.push_back(slot);
  };
  if (from.vertex >= 0) {
    auto it = g.vslot.find(from.vertex);
    if (it == g.vslot.end()) throw validation_error("walk endpoint off the sheet skeleton");
    seed(it->second, nullptr);
  } else {
    auto it = g.touch.find(from.edge);
    if (it == g.touch.end() || it->second.empty())
      throw validation_error("walk endpoint off the sheet skeleton");
    for (int slot : it->second) {
      ChainPiece p = edge_part(from.edge, from.pt, g.pos[static_cast<size_t>(slot)], w, fr);
      seed(slot, &p);
    }
  }
  std::vector<int> targets;
  if (to.vertex >= 0) {
    auto it = g.vslot.find(to.vertex);
    if (it == g.vslot.end()) throw validation_error("walk endpoint off the sheet skeleton");
    targets.push_back(it->second);
  } else {
    auto it = g.touch.find(to.edge);
    if (it == g.touch.end() || it->second.empty())
      throw validation_error("walk endpoint off the sheet skeleton");
    targets = it->second;
  }
  for (size_t h = 0; h < queue.size(); ++h) {
    int at = queue[h];
    for (auto [es, nb] : g.adj[static_cast<size_t>(at)]) {
      if (dist[static_cast<size_t>(nb)] >= 0) continue;
      dist[static_cast<size_t>(nb)] = dist[static_cast<size_t>(at)] + 1;
      par_edge[static_cast<size_t>(nb)] = es;
      par_vert[static_cast<size_t>(nb)] = at;
      queue.push_back(nb);
    }
  }
  int best = -1;
  for (int t : targets) {
    if (dist[static_cast<size_t>(t)] < 0) continue;
    if (best < 0 || dist[static_cast<size_t>(t)] < dist[static_cast<size_t>(best)] ||
        (dist[static_cast<size_t>(t)] == dist[static_cast<size_t>(best)] && t < best))
      best = t;
  }
  if (best < 0) throw validation_error("skeleton walk target unreachable");
  std::vector<std::array<int, 3>> steps;  // edge slot, tail, head
  int at = best;
  while (par_vert[static_cast<size_t>(at)] >= 0) {
    steps.push_back({par_edge[static_cast<size_t>(at)], par_vert[static_cast<size_t>(at)], at});
    at = par_vert[static_cast<size_t>(at)];
  }
  auto eit = entry.find(at);
  if (eit != entry.end()) out.push_back(eit->second);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out.push_back(edge_part(g.edge_cells[static_cast<size_t>((*it)[0])],
                            g.pos[static_cast<size_t>((*it)[1])],
                            g.pos[static_cast<size_t>((*it)[2])], w, fr));
  if (to.edge >= 0)
    out.push_back(edge_part(to.edge, g.pos[static_cast<size_t>(best)], to.pt, w, fr));
}

// ---- connectors and residue disposal ----

// generic interior point on the skeleton of a plane curve, bounded edges
// first, away from every listed point
RatVec pick_connector(const TropicalComplex& cx, const std::vector<RatVec>& avoid) {
  const std::array<Rat, 9> fr = {Rat(1) / Rat(2), Rat(1) / Rat(3), Rat(2) / Rat(3),
                                 Rat(1) / Rat(4), Rat(3) / Rat(4), Rat(1) / Rat(5),
                                 Rat(2) / Rat(5), Rat(3) / Rat(5), Rat(4) / Rat(5)};
  for (int e : cx.cells_of_dim(1)) {
    const Cell& c = cx.cell(e);
    if (!c.sed.empty() || c.vertices.cols() != 2) continue;
    RatVec u = c.vertices.col(0), v = c.vertices.col(1);
    for (const Rat& t : fr) {
      RatVec cand = u + t * (v - u);
      if (!hits(avoid, cand)) return cand;
    }
  }
  for (int e : cx.cells_of_dim(1)) {
    const Cell& c = cx.cell(e);
    if (!c.sed.empty() || c.vertices.cols() != 1 || c.rays.cols() != 1) continue;
    RatVec u = c.vertices.col(0);
    RatVec rd = to_rat(IntVec(c.rays.col(0)));
    for (int t = 1; t <= 16; ++t) {
      RatVec cand = u + Rat(t) * rd;
      if (!hits(avoid, cand)) return cand;
    }
  }
  throw validation_error("no generic connector point found");
}

struct WallScaffold {
  std::vector<RatVec> conn;      // conn[j-1]: connector point on curve j
  std::vector<SkelGraph> sheet;  // sheet[s-1]: skeleton of sheet s
};

WallScaffold scaffold(const TropicalComplex& x, const FloorPlan& plan,
                      const FloorDecomposition& fd,
                      const std::vector<std::vector<RatVec>>& extra_avoid) {
  WallScaffold sc;
  int d = plan.degree;
  for (int j = 1; j <= d; ++j) {
    std::vector<RatVec> avoid = curve_marks(plan, j);
    if (static_cast<size_t>(j) <= extra_avoid.size())
      for (const RatVec& p : extra_avoid[static_cast<size_t>(j) - 1]) avoid.push_back(p);
    sc.conn.push_back(pick_connector(plan.complexes[static_cast<size_t>(j) - 1], avoid));
  }
  for (int s = 1; s <= d; ++s) {
    std::vector<int> cells = fd.top_rim_edges[static_cast<size_t>(s)];
    for (int e : fd.bottom_rim_edges[static_cast<size_t>(s) - 1]) cells.push_back(e);
    sc.sheet.push_back(skeleton_graph(x, std::move(cells)));
  }
  return sc;
}

// Walks a vertical residue from a point of the given sheet to the connector
// below it, drops one wall, and repeats until it leaves through the bottom
// fence, where the boundary stratum absorbs it.
void dispose_down(const TropicalComplex& x, const SheetGeom& g, const WallScaffold& sc,
                  int sheet, const RatVec& p3, const Int& w, std::vector<ChainPiece>& out) {
  if (w == 0) return;
  RatVec at = p3;
  for (int s = sheet; s <= g.d; ++s) {
    RatVec cxy = sc.conn[static_cast<size_t>(s) - 1];
    RatVec tgt = lift3(cxy, g.alt(s, cxy));
    skeleton_walk(sc.sheet[static_cast<size_t>(s) - 1], locate_on_skeleton(x, at),
                  locate_on_skeleton(x, tgt), w, e3(), out);
    if (s == g.d) {
      IntVec dn = IntVec::Zero(3);
      dn(2) = -1;
      out.push_back(ray_piece(x, tgt, dn, w, e3()));
      return;
    }
    RatVec below = lift3(cxy, g.alt(s + 1, cxy));
    out.push_back(lifted_piece(x, tgt, below, w, e3()));
    at = below;
  }
}

// ---- straight escapes across the creases of a sheet ----

struct CornerPath {
  std::vector<ChainPiece> pieces;
  std::vector<RatVec> junctions;  // lifted crease crossings in path order
  std::vector<IntVec> grads;      // altitude gradient per stretch, one extra
};

// Follows the graph of the sheet altitude from base2 in direction dir2,
// bending at each crease, until the flat far region.  Pieces are framed by
// phi with the matching vertical component, so only the crease junctions
// leave vertical residues.  Returns nothing when the ray is non-generic.
std::optional<CornerPath> corner_path(const TropicalComplex& x, const SheetGeom& g,
                                      const FloorPlan& plan, int sheet,
                                      const RatVec& base2, const IntVec& dir2,
                                      const IntVec& phi, const Int& w) {
  std::vector<const TropicalComplex*> creases;
  if (sheet >= 2) creases.push_back(&plan.complexes[static_cast<size_t>(sheet) - 2]);
  creases.push_back(&plan.complexes[static_cast<size_t>(sheet) - 1]);
  RatVec rd = to_rat(dir2);
  std::vector<Rat> ts;
  for (const TropicalComplex* cx : creases)
    for (int e : cx->cells_of_dim(1)) {
      const Cell& c = cx->cell(e);
      if (!c.sed.empty()) continue;
      RatVec v0 = c.vertices.col(0);
      bool is_ray = c.vertices.cols() == 1;
      RatVec ed =
          is_ray ? RatVec(to_rat(IntVec(c.rays.col(0)))) : RatVec(c.vertices.col(1) - v0);
      Rat den2 = rd(0) * ed(1) - rd(1) * ed(0);
      RatVec rhs = v0 - base2;
      if (den2 == 0) {
        if (rhs(0) * ed(1) - rhs(1) * ed(0) == 0) return std::nullopt;  // runs along it
        continue;
      }
      Rat t = (rhs(0) * ed(1) - rhs(1) * ed(0)) / den2;
      Rat eta = (rd(1) * rhs(0) - rd(0) * rhs(1)) / den2;
      if (t <= 0) continue;
      if (is_ray) {
        if (eta < 0) continue;
        if (eta == 0) return std::nullopt;  // through a crease vertex
      } else {
        if (eta < 0 || eta > 1) continue;
        if (eta == 0 || eta == 1) return std::nullopt;
      }
      ts.push_back(t);
    }
  std::sort(ts.begin(), ts.end());
  for (size_t k = 0; k + 1 < ts.size(); ++k)
    if (ts[k] == ts[k + 1]) return std::nullopt;  // double crossing
  CornerPath cp;
  std::vector<Rat> cuts;
  cuts.push_back(Rat(0));
  for (const Rat& t : ts) cuts.push_back(t);
  try {
    for (size_t r = 0; r < cuts.size(); ++r) {
      Rat pt = r + 1 < cuts.size() ? (cuts[r] + cuts[r + 1]) / Rat(2) : cuts[r] + Rat(1);
      cp.grads.push_back(g.grad(sheet, RatVec(base2 + pt * rd)));
    }
  } catch (const validation_error&) {
    return std::nullopt;
  }
  if (!is_zero(cp.grads.back())) return std::nullopt;
  RatVec prev3 = lift3(base2, g.alt(sheet, base2));
  for (size_t r = 0; r + 1 < cuts.size(); ++r) {
    RatVec next2 = base2 + cuts[r + 1] * rd;
    RatVec next3 = lift3(next2, g.alt(sheet, next2));
    IntVec fr3 = IntVec::Zero(3);
    fr3(0) = phi(0);
    fr3(1) = phi(1);
    fr3(2) = dot2(cp.grads[r], phi);
    cp.pieces.push_back(lifted_piece(x, prev3, next3, w, fr3));
    cp.junctions.push_back(next3);
    prev3 = next3;
  }
  IntVec dir3 = IntVec::Zero(3);
  dir3(0) = dir2(0);
  dir3(1) = dir2(1);
  IntVec frf = IntVec::Zero(3);
  frf(0) = phi(0);
  frf(1) = phi(1);
  cp.pieces.push_back(ray_piece(x, prev3, dir3, w, frf));
  return cp;
}

std::vector<IntVec> escape_directions() {
  std::vector<IntVec> out;
  for (int n = 2; static_cast<int>(out.size()) < 40; ++n)
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n - a) != 1) continue;
      IntVec v = IntVec::Zero(2);
      v(0) = -a;
      v(1) = -(n - a);
      out.push_back(v);
    }
  return out;
}

// Dual cycle of a curve loop: crosses the wall once at the breaking point,
// escapes along both adjacent sheets in a common direction, and ships the
// leftover vertical residues down to the fence.
FramedChain breaking_dual(const TropicalComplex& x, const SheetGeom& g,
                          const FloorPlan& plan, const WallScaffold& sc, int i,
                          const BreakingPoint& bp) {
  const RatVec& b2 = bp.point;
  const IntVec& phi = bp.framing;
  Rat zup = g.alt(i, b2), zdn = g.alt(i + 1, b2);
  IntVec fw = IntVec::Zero(3);
  fw(0) = phi(0);
  fw(1) = phi(1);
  for (const IntVec& dir2 : escape_directions()) {
    auto up = corner_path(x, g, plan, i, b2, dir2, phi, 1);
    if (!up) continue;
    auto dn = corner_path(x, g, plan, i + 1, b2, dir2, phi, -1);
    if (!dn) continue;
    FramedChain c;
    c.pieces.push_back(lifted_piece(x, lift3(b2, zdn), lift3(b2, zup), 1, fw));
    for (const ChainPiece& p : up->pieces) c.pieces.push_back(p);
    for (const ChainPiece& p : dn->pieces) c.pieces.push_back(p);
    dispose_down(x, g, sc, i, lift3(b2, zup), -dot2(up->grads[0], phi), c.pieces);
    dispose_down(x, g, sc, i + 1, lift3(b2, zdn), dot2(dn->grads[0], phi), c.pieces);
    for (size_t r = 0; r < up->junctions.size(); ++r)
      dispose_down(x, g, sc, i, up->junctions[r],
                   dot2(IntVec(up->grads[r] - up->grads[r + 1]), phi), c.pieces);
    for (size_t r = 0; r < dn->junctions.size(); ++r)
      dispose_down(x, g, sc, i + 1, dn->junctions[r],
                   dot2(IntVec(dn->grads[r + 1] - dn->grads[r]), phi), c.pieces);
    return c;
  }
  throw validation_error("no escape direction clears the crease pattern");
}

// ---- push-offs into the walls ----

const Rat kThird = Rat(1) / Rat(3);

// interior height of wall j over a point of curve j, near its lower rim
Rat push_above(const SheetGeom& g, int j, const RatVec& xy) {
  return g.alt(j + 1, xy) + kThird * (g.alt(j, xy) - g.alt(j + 1, xy));
}

// interior height of wall j over curve j, near its upper rim
Rat push_below(const SheetGeom& g, int j, const RatVec& xy) {
  if (j == g.d) return g.alt(g.d, xy) - 1;
  return g.alt(j, xy) - kThird * (g.alt(j, xy) - g.alt(j + 1, xy));
}

// lifts a plane route at the given height function, subdividing each leg at
// the marks so every emitted piece is straight inside one facet
void pushed_route(const TropicalComplex& x,
                  const std::vector<std::pair<RatVec, RatVec>>& segs,
                  const std::vector<RatVec>& marks,
                  const std::function<Rat(const RatVec&)>& hz, const Int& w,
                  const IntVec& fr, std::vector<ChainPiece>& out) {
  for (const auto& [a2, b2] : segs) {
    std::vector<RatVec> pts = refine_segment(a2, b2, marks);
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      out.push_back(lifted_piece(x, lift3(pts[k], hz(pts[k])),
                                 lift3(pts[k + 1], hz(pts[k + 1])), w, fr));
  }
}

std::vector<std::pair<RatVec, RatVec>> loop_route(const TropicalComplex& cx,
                                                  const BreakingPoint& bp) {
  std::vector<std::pair<RatVec, RatVec>> segs;
  for (size_t k = 0; k < bp.loop_edges.size(); ++k) {
    const Cell& c = cx.cell(bp.loop_edges[k]);
    RatVec p0 = c.vertices.col(0), p1 = c.vertices.col(1);
    if (bp.loop_signs[k] > 0)
      segs.push_back({p0, p1});
    else
      segs.push_back({p1, p0});
  }
  for (size_t k = 0; k < segs.size(); ++k)
    if (!same_pt(segs[k].second, segs[(k + 1) % segs.size()].first))
      throw validation_error("restored loop is not closed");
  return segs;
}

// The vertical generator: the three boundary rays of the top sheet close up
// over the apex of the degree-one curve, and the leftover residue runs down
// the fence.
FramedChain build_vertical(const TropicalComplex& x, const SheetGeom& g,
                           const FloorPlan& plan, const WallScaffold& sc,
                           const FloorDecomposition& fd) {
  const TropicalComplex& c1 = plan.complexes[0];
  int apex = -1;
  for (int c : c1.cells_of_dim(0))
    if (c1.cell(c).sed.empty()) {
      if (apex >= 0) throw validation_error("degree-one curve with several vertices");
      apex = c;
    }
  if (apex < 0) throw validation_error("degree-one curve without a vertex");
  RatVec a2 = c1.cell(apex).vertices.col(0);
  RatVec a3 = lift3(a2, g.alt(1, a2));
  FramedChain v;
  IntVec sum = IntVec::Zero(3);
  int nrays = 0;
  for (int e : fd.top_rim_edges[1]) {
    const Cell& ce = x.cell(e);
    if (ce.vertices.cols() != 1 || ce.rays.cols() != 1) continue;
    if (!same_pt(RatVec(ce.vertices.col(0)), a3)) continue;
    IntVec dir = ce.rays.col(0);
    ChainPiece p;
    p.a = a3;
    p.bounded = false;
    p.dir = dir;
    p.weight = 1;
    p.framing = dir;
    p.host = e;
    p.limit = ray_limit(x, e, dir);
    v.pieces.push_back(p);
    sum += dir;
    ++nrays;
  }
  if (nrays != 3 || !is_zero(IntVec(sum - e3())))
    throw validation_error("boundary rays do not close the vertical cycle");
  dispose_down(x, g, sc, 1, a3, -1, v.pieces);
  return v;
}

}  // namespace

SurfaceCycles basis_cycles(const TropicalComplex& x, const TropicalPolynomial& f,
                           const FloorPlan& plan, const FloorDecomposition& fd) {
  int d = plan.degree;
  SheetGeom g = sheet_geom(f, plan);
  // breaking points come first: the connectors must avoid them
  std::vector<CurveSkeleton> skel;
  std::vector<std::vector<RatVec>> avoid(static_cast<size_t>(d));
  for (int i = 1; i <= d - 1; ++i) {
    skel.push_back(curve_breaking_points(plan.complexes[static_cast<size_t>(i) - 1],
                                         curve_marks(plan, i)));
    for (const BreakingPoint& bp : skel.back().points)
      avoid[static_cast<size_t>(i) - 1].push_back(bp.point);
  }
  WallScaffold sc = scaffold(x, plan, fd, avoid);
  SurfaceCycles out;
  for (int i = 1; i <= d - 1; ++i) {
    const std::vector<Crossing>& cr = plan.crossings[static_cast<size_t>(i) - 1];
    const std::vector<int>& lifted = fd.lifted_crossings[static_cast<size_t>(i) - 1];
    SkelGraph lowG = skeleton_graph(x, fd.bottom_rim_edges[static_cast<size_t>(i)]);
    SkelGraph highG = skeleton_graph(x, fd.top_rim_edges[static_cast<size_t>(i) + 1]);
    std::vector<RatVec> low_marks = curve_marks(plan, i);
    std::vector<RatVec> high_marks = curve_marks(plan, i + 1);
    for (size_t s = 0; s + 1 < lifted.size(); ++s) {
      SkelLoc va, vb;
      va.vertex = lifted[s];
      vb.vertex = lifted[s + 1];
      std::vector<ChainPiece> low_w, high_w;
      skeleton_walk(lowG, va, vb, 1, e3(), low_w);
      skeleton_walk(highG, vb, va, 1, e3(), high_w);
      FramedChain around;
      for (const ChainPiece& p : low_w) around.pieces.push_back(p);
      for (const ChainPiece& p : high_w) around.pieces.push_back(p);
      // the push-off paired against the vertical cycle: the same route moved
      // into the interiors of the two walls, joined by verticals split where
      // the walls meet
      FramedChain moved;
      std::vector<std::pair<RatVec, RatVec>> lsegs, hsegs;
      for (const ChainPiece& p : low_w) lsegs.push_back({drop_z(p.a), drop_z(p.b)});
      for (const ChainPiece& p : high_w) hsegs.push_back({drop_z(p.a), drop_z(p.b)});
      auto lower = [&](const RatVec& q) { return push_above(g, i, q); };
      auto upper = [&](const RatVec& q) { return push_below(g, i + 1, q); };
      pushed_route(x, lsegs, low_marks, lower, 1, e3(), moved.pieces);
      RatVec xs = cr[s].point, xt = cr[s + 1].point;
      moved.pieces.push_back(lifted_piece(x, lift3(xt, push_above(g, i, xt)),
                                          lift3(xt, g.alt(i + 1, xt)), 1, e3()));
      moved.pieces.push_back(lifted_piece(x, lift3(xt, g.alt(i + 1, xt)),
                                          lift3(xt, push_below(g, i + 1, xt)), 1, e3()));
      pushed_route(x, hsegs, high_marks, upper, 1, e3(), moved.pieces);
      moved.pieces.push_back(lifted_piece(x, lift3(xs, push_below(g, i + 1, xs)),
                                          lift3(xs, g.alt(i + 1, xs)), 1, e3()));
      moved.pieces.push_back(lifted_piece(x, lift3(xs, g.alt(i + 1, xs)),
                                          lift3(xs, push_above(g, i, xs)), 1, e3()));
      out.floor_cycles.push_back(std::move(around));
      out.floor_pairing.push_back(std::move(moved));
      out.floor_of.push_back(i);
    }
  }
  for (int i = 1; i <= d - 1; ++i) {
    const TropicalComplex& cx = plan.complexes[static_cast<size_t>(i) - 1];
    std::vector<RatVec> marks = curve_marks(plan, i);
    for (const BreakingPoint& bp : skel[static_cast<size_t>(i) - 1].points) {
      std::vector<std::pair<RatVec, RatVec>> segs = loop_route(cx, bp);
      FramedChain loop, pairl;
      auto rim = [&](const RatVec& q) { return g.alt(i + 1, q); };
      auto wall = [&](const RatVec& q) { return push_above(g, i, q); };
      pushed_route(x, segs, marks, rim, 1, e3(), loop.pieces);
      pushed_route(x, segs, marks, wall, 1, e3(), pairl.pieces);
      out.curve_cycles.push_back(std::move(loop));
      out.curve_pairing.push_back(std::move(pairl));
      out.break_cycles.push_back(breaking_dual(x, g, plan, sc, i, bp));
      out.curve_of.push_back(i);
    }
  }
  out.vertical = build_vertical(x, g, plan, sc, fd);
  for (size_t l = 0; l < out.break_cycles.size(); ++l) {
    Int m = transversal_intersection(out.break_cycles[l], out.curve_pairing[l], x);
    if (m == -1)
      out.break_cycles[l] = reversed(std::move(out.break_cycles[l]));
    else if (m != 1)
      throw validation_error("breaking dual does not pair unimodularly with its loop");
  }
  return out;
}

namespace {

// ---- fibers and the lifted line on a graph modification ----

IntVec edge_dir(const TropicalComplex& cx, int cell) {
  const Cell& c = cx.cell(cell);
  if (c.vertices.cols() == 2) return primitive(RatVec(c.vertices.col(1) - c.vertices.col(0)));
  if (c.rays.cols() == 1) return c.rays.col(0);
  throw input_error("cell is not an edge");
}

// shrink the positive/negative room along dir toward the listed point
void shrink_room(const RatVec& base, const IntVec& dir, const RatVec& p,
                 std::optional<Rat>& pos, std::optional<Rat>& neg) {
  Eigen::Index ix = dir(0) != 0 ? 0 : 1;
  Rat t = (p(ix) - base(ix)) / Rat(dir(ix));
  if (t > 0 && (!pos || t < *pos)) pos = t;
  if (t < 0 && (!neg || -t < *neg)) neg = -t;
}

// The local pairing partner of a fiber: a homologous cycle bent sideways off
// the crossing so the two meet in a single interior point of the standing
// facet.  All slopes are validated exactly; the probe window shrinks until
// no other feature interferes.
FramedChain bent_fiber(const TropicalComplex& y, const TropicalPolynomial& top,
                       const TropicalPolynomial& bottom, const TropicalComplex& tcx,
                       const TropicalComplex& bcx, const std::vector<Crossing>& all,
                       size_t self, const FramedChain& fiber) {
  const Crossing& cr = all[self];
  auto h = [&](const RatVec& q) { return top.evaluate(q) - bottom.evaluate(q); };
  IntVec u = edge_dir(tcx, cr.high_edge);
  IntVec w = edge_dir(bcx, cr.low_edge);
  std::optional<Rat> u_room, wp_room, wm_room, unused;
  const Cell& he = tcx.cell(cr.high_edge);
  for (Eigen::Index k = 0; k < he.vertices.cols(); ++k)
    shrink_room(cr.point, u, RatVec(he.vertices.col(k)), u_room, unused);
  const Cell& le = bcx.cell(cr.low_edge);
  for (Eigen::Index k = 0; k < le.vertices.cols(); ++k)
    shrink_room(cr.point, w, RatVec(le.vertices.col(k)), wp_room, wm_room);
  for (size_t k = 0; k < all.size(); ++k) {
    if (k == self) continue;
    if (all[k].high_edge == cr.high_edge)
      shrink_room(cr.point, u, all[k].point, u_room, unused);
    if (all[k].low_edge == cr.low_edge)
      shrink_room(cr.point, w, all[k].point, wp_room, wm_room);
  }
  Rat delta(1);
  for (const std::optional<Rat>& room : {u_room, wp_room, wm_room})
    if (room && *room / Rat(2) < delta) delta = *room / Rat(2);
  int up_host = fiber.pieces[0].host, down_host = fiber.pieces[1].host;
  for (int attempt = 0; attempt < 60; ++attempt, delta = delta / Rat(2)) {
    try {
      const RatVec& pk = cr.point;
      Rat hk = h(pk);
      RatVec r1 = pk + delta * to_rat(w);
      RatVec r4 = pk - delta * to_rat(w);
      Rat sp = (h(r1) - hk) / delta;
      Rat sm = (hk - h(r4)) / delta;
      if (den(sp) != 1 || den(sm) != 1)
        throw validation_error("graph slope is not integral");
      if (h(RatVec(pk + delta / Rat(2) * to_rat(w))) != hk + delta / Rat(2) * sp ||
          h(RatVec(pk - delta / Rat(2) * to_rat(w))) != hk - delta / Rat(2) * sm)
        throw validation_error("graph kinks inside the probe window");
      if (num(sp) - num(sm) != 1)
        throw validation_error("crossing is not unimodular for the graph");
      IntVec fa = IntVec::Zero(3);
      fa(0) = w(0);
      fa(1) = w(1);
      fa(2) = num(sp);
      IntVec fb = IntVec(e3() - fa);
      RatVec P2 = pk + delta * to_rat(u);
      RatVec P3 = lift3(P2, h(P2));
      RatVec R13 = lift3(r1, h(r1));
      RatVec R43 = lift3(r4, h(r4));
      RatVec T2 = pk + delta / Rat(2) * to_rat(w);
      RatVec T3 = lift3(T2, h(T2) + 1);
      FramedChain c;
      IntVec dn = IntVec::Zero(3);
      dn(2) = -1;
      c.pieces.push_back(ray_piece(y, P3, dn, -1, e3()));
      c.pieces.push_back(lifted_piece(y, P3, R13, 1, fa));
      c.pieces.push_back(lifted_piece(y, P3, R43, 1, fb));
      c.pieces.push_back(lifted_piece(y, R13, T3, 1, fa));
      c.pieces.push_back(lifted_piece(y, R43, T3, 1, fb));
      c.pieces.push_back(ray_piece(y, T3, e3(), 1, e3()));
      if (c.pieces[0].host != down_host)
        throw validation_error("bent fiber misses the hanging facet");
      const Cell& h1 = y.cell(c.pieces[1].host);
      const Cell& h2 = y.cell(c.pieces[2].host);
      if (h1.dim != 2 || h2.dim != 2 || !h1.sed.empty() || !h2.sed.empty() ||
          c.pieces[1].host == c.pieces[2].host || c.pieces[1].host == up_host ||
          c.pieces[2].host == up_host || c.pieces[1].host == down_host ||
          c.pieces[2].host == down_host)
        throw validation_error("bent fiber bridges the wrong facets");
      if (c.pieces[3].host != up_host || c.pieces[4].host != up_host ||
          c.pieces[5].host != up_host)
        throw validation_error("bent fiber misses the standing facet");
      return c;
    } catch (const validation_error&) {
    }
  }
  throw validation_error("bent fiber construction failed to converge");
}

FramedChain fiber_cycle(const TropicalComplex& y,
                        const std::function<Rat(const RatVec&)>& h, const RatVec& pt) {
  Weighted1Cycle wc;
  RatVec p3 = lift3(pt, h(pt));
  WeightedEdge up;
  up.a = p3;
  up.bounded = false;
  up.dir = e3();
  WeightedEdge dn;
  dn.a = p3;
  dn.bounded = false;
  dn.dir = IntVec(-e3());
  wc.edges.push_back(up);
  wc.edges.push_back(dn);
  return cyc(wc, y);
}

struct LineBuild {
  FramedChain chain;
  TropicalComplex cx;
};

// Lifts the tropical line with apex (-a, -b) to the graph modification: the
// skeleton follows the graph of the height difference and every crossing
// with one of the two curves hangs a vertical ray patching the slope jump.
std::optional<LineBuild> try_line(const TropicalComplex& y, const TropicalPolynomial& top,
                                  const TropicalPolynomial& bottom,
                                  const TropicalComplex& tcx, const TropicalComplex& bcx,
                                  const std::vector<RatVec>& fiber_pts, const Rat& a,
                                  const Rat& b) {
  std::vector<IntVec> exps(3, IntVec::Zero(2));
  exps[1](0) = 1;
  exps[2](1) = 1;
  TropicalPolynomial lp(exps, {Rat(0), a, b});
  TropicalComplex lcx = build_variety(lp, projective_ambient(2));
  std::vector<Crossing> lt, lb;
  try {
    lt = curve_crossings(lcx, tcx);
    lb = curve_crossings(lcx, bcx);
  } catch (const input_error&) {
    return std::nullopt;
  }
  if (static_cast<int>(lt.size()) != top.degree() ||
      static_cast<int>(lb.size()) != bottom.degree())
    return std::nullopt;
  for (const Crossing& c : lt)
    if (hits(fiber_pts, c.point)) return std::nullopt;
  for (const Crossing& c : lb)
    if (hits(fiber_pts, c.point)) return std::nullopt;
  for (const Crossing& c : lt)
    for (const Crossing& c2 : lb)
      if (same_pt(c.point, c2.point)) return std::nullopt;
  auto h = [&](const RatVec& q) { return top.evaluate(q) - bottom.evaluate(q); };
  RatVec apex(2);
  apex(0) = -a;
  apex(1) = -b;
  try {
    Weighted1Cycle wc;
    for (int e : lcx.cells_of_dim(1)) {
      const Cell& c = lcx.cell(e);
      if (!c.sed.empty()) continue;
      if (c.vertices.cols() != 1 || c.rays.cols() != 1)
        return std::nullopt;  // a generic line has no bounded edges
      IntVec ur = c.rays.col(0);
      Eigen::Index ix = ur(0) != 0 ? 0 : 1;
      struct Event {
        Rat t;
        RatVec pt;
      };
      std::vector<Event> ev;
      for (const Crossing& cc : lt)
        if (cc.low_edge == e)
          ev.push_back({(cc.point(ix) - apex(ix)) / Rat(ur(ix)), cc.point});
      for (const Crossing& cc : lb)
        if (cc.low_edge == e)
          ev.push_back({(cc.point(ix) - apex(ix)) / Rat(ur(ix)), cc.point});
      std::sort(ev.begin(), ev.end(),
                [](const Event& p, const Event& q) { return p.t < q.t; });
      for (const Event& e2 : ev)
        if (e2.t <= 0) return std::nullopt;
      for (size_t k = 0; k + 1 < ev.size(); ++k)
        if (ev[k].t == ev[k + 1].t) return std::nullopt;
      std::vector<Rat> cuts;
      cuts.push_back(Rat(0));
      for (const Event& e2 : ev) cuts.push_back(e2.t);
      RatVec rdir = to_rat(ur);
      std::vector<Int> sigma;
      for (size_t k = 0; k < cuts.size(); ++k) {
        Rat pt = k + 1 < cuts.size() ? (cuts[k] + cuts[k + 1]) / Rat(2) : cuts[k] + Rat(1);
        IntVec gh =
            IntVec(poly_grad(top, RatVec(apex + pt * rdir)) -
                   poly_grad(bottom, RatVec(apex + pt * rdir)));
        sigma.push_back(dot2(gh, ur));
      }
      auto at2 = [&](const Rat& t) { return RatVec(apex + t * rdir); };
      for (size_t k = 0; k + 1 < cuts.size(); ++k)
        if (h(at2(cuts[k + 1])) - h(at2(cuts[k])) !=
            Rat(sigma[k]) * (cuts[k + 1] - cuts[k]))
          return std::nullopt;
      if (h(at2(cuts.back() + Rat(2))) - h(at2(cuts.back() + Rat(1))) != Rat(sigma.back()))
        return std::nullopt;
      auto at3 = [&](const Rat& t) {
        RatVec q = at2(t);
        return lift3(q, h(q));
      };
      for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        WeightedEdge seg;
        seg.a = at3(cuts[k]);
        seg.b = at3(cuts[k + 1]);
        wc.edges.push_back(seg);
        Int jump = sigma[k] - sigma[k + 1];
        if (jump != 1 && jump != -1) return std::nullopt;
        WeightedEdge vert;
        vert.a = at3(cuts[k + 1]);
        vert.bounded = false;
        vert.dir = IntVec::Zero(3);
        vert.dir(2) = jump;
        wc.edges.push_back(vert);
      }
      WeightedEdge tail;
      tail.a = at3(cuts.back());
      tail.bounded = false;
      tail.dir = IntVec::Zero(3);
      tail.dir(0) = ur(0);
      tail.dir(1) = ur(1);
      tail.dir(2) = sigma.back();
      wc.edges.push_back(tail);
    }
    LineBuild out{cyc(wc, y), std::move(lcx)};
    return out;
  } catch (const validation_error&) {
    return std::nullopt;
  } catch (const input_error&) {
    return std::nullopt;
  }
}

}  // namespace

FramedChain lifted_line(const TropicalComplex& y, const TropicalPolynomial& top,
                        const TropicalPolynomial& bottom, const Rat& a,
                        const Rat& b) {
  Ambient amb = projective_ambient(2);
  TropicalComplex tcx = build_variety(top, amb);
  TropicalComplex bcx = build_variety(bottom, amb);
  std::vector<RatVec> fiber_pts;
  for (const Crossing& c : curve_crossings(bcx, tcx)) fiber_pts.push_back(c.point);
  auto lb = try_line(y, top, bottom, tcx, bcx, fiber_pts, a, b);
  if (!lb || !is_cycle(lb->chain, y))
    throw validation_error("lifted line is not in generic position");
  return std::move(lb->chain);
}

GraphPairCycles graph_pair_cycles(const TropicalComplex& y, const TropicalPolynomial& top,
                                  const TropicalPolynomial& bottom, bool with_line) {
  Ambient amb = projective_ambient(2);
  TropicalComplex tcx = build_variety(top, amb);
  TropicalComplex bcx = build_variety(bottom, amb);
  std::vector<Crossing> cross = curve_crossings(bcx, tcx);
  GraphPairCycles out;
  auto h = [&](const RatVec& q) { return top.evaluate(q) - bottom.evaluate(q); };
  for (const Crossing& cr : cross) out.crossings.push_back(cr.point);
  for (size_t k = 0; k < cross.size(); ++k) {
    out.fibers.push_back(fiber_cycle(y, h, cross[k].point));
    out.bent_fibers.push_back(
        bent_fiber(y, top, bottom, tcx, bcx, cross, k, out.fibers.back()));
  }
  FramedComplex f1(y, 1);
  for (const FramedChain& c : out.fibers)
    if (!is_cycle(c, f1)) throw validation_error("fiber fails the closure check");
  for (const FramedChain& c : out.bent_fibers)
    if (!is_cycle(c, f1)) throw validation_error("bent fiber fails the closure check");
  if (with_line) {
    std::optional<LineBuild> first, second;
    for (int t = 1; t <= 200 && !second; ++t) {
      Rat a = Rat(64 * t + 1) / Rat(64);
      Rat b = Rat(128 * t + 3) / Rat(64);
      auto lb = try_line(y, top, bottom, tcx, bcx, out.crossings, a, b);
      if (!lb) continue;
      if (!is_cycle(lb->chain, f1)) continue;
      if (!first) {
        first = std::move(lb);
        continue;
      }
      try {
        std::vector<Crossing> cc = curve_crossings(first->cx, lb->cx);
        if (cc.size() != 1) continue;
        if (tcx.locate({}, cc[0].point) >= 0 || bcx.locate({}, cc[0].point) >= 0) continue;
      } catch (const input_error&) {
        continue;
      }
      second = std::move(lb);
    }
    if (!first || !second) throw validation_error("no generic lifted line found");
    out.line = std::move(first->chain);
    out.line_copy = std::move(second->chain);
  }
  return out;
}

IntersectionForm graph_pair_form(const TropicalComplex& y, const GraphPairCycles& gc) {
  size_t n = gc.fibers.size();
  bool line = !gc.line.pieces.empty();
  IntersectionForm q;
  for (size_t k = 0; k < n; ++k) {
    q.labels.push_back("E" + std::to_string(k + 1));
    q.block.push_back('E');
  }
  if (line) {
    q.labels.push_back("L");
    q.block.push_back('L');
  }
  size_t m = q.labels.size();
  q.entries.assign(m, std::vector<std::optional<Int>>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Int v = i == j ? transversal_intersection(gc.fibers[i], gc.bent_fibers[i], y)
                     : transversal_intersection(gc.fibers[i], gc.fibers[j], y);
      q.entries[i][j] = v;
      q.entries[j][i] = v;
    }
  if (line) {
    for (size_t i = 0; i < n; ++i) {
      Int v = transversal_intersection(gc.fibers[i], gc.line, y);
      q.entries[i][m - 1] = v;
      q.entries[m - 1][i] = v;
    }
    q.entries[m - 1][m - 1] = transversal_intersection(gc.line, gc.line_copy, y);
  }
  return q;
}

IntersectionForm assemble_form(const TropicalComplex& x, const FloorPlan& plan,
                               const FloorDecomposition& fd, const SurfaceCycles& cy) {
  int d = plan.degree;
  size_t nA = cy.floor_cycles.size();
  size_t nC = cy.curve_cycles.size();
  size_t n = nA + 2 * nC + 1;
  IntersectionForm q;
  {
    std::map<int, int> ordinal;
    for (size_t a = 0; a < nA; ++a) {
      int i = cy.floor_of[a];
      q.labels.push_back("A" + std::to_string(i) + "." + std::to_string(++ordinal[i]));
      q.block.push_back('A');
    }
  }
  for (char tag : {'C', 'B'}) {
    std::map<int, int> ordinal;
    for (size_t l = 0; l < nC; ++l) {
      int i = cy.curve_of[l];
      q.labels.push_back(std::string(1, tag) + std::to_string(i) + "." +
                         std::to_string(++ordinal[i]));
      q.block.push_back(tag);
    }
  }
  q.labels.push_back("V");
  q.block.push_back('V');
  q.entries.assign(n, std::vector<std::optional<Int>>(n));
  auto put = [&](size_t i, size_t j, const Int& v) {
    q.entries[i][j] = v;
    q.entries[j][i] = v;
  };
  // floor block: loops around a common floor pair through the fibers of its
  // graph modification; loops around distinct floors pair directly
  size_t base = 0;
  for (int i = 1; i <= d - 1; ++i) {
    size_t cnt = 0;
    for (size_t a = 0; a < nA; ++a)
      if (cy.floor_of[a] == i) ++cnt;
    if (cnt == 0) continue;
    const std::vector<Crossing>& cr = plan.crossings[static_cast<size_t>(i) - 1];
    if (cnt + 1 != cr.size())
      throw validation_error("floor cycle count does not match the crossings");
    TropicalComplex yi = graph_modification(plan.curves[static_cast<size_t>(i)],
                                            plan.curves[static_cast<size_t>(i) - 1]);
    GraphPairCycles gp = graph_pair_cycles(yi, plan.curves[static_cast<size_t>(i)],
                                           plan.curves[static_cast<size_t>(i) - 1], false);
    if (gp.crossings.size() != cr.size())
      throw validation_error("graph model misses crossings of the floor");
    for (size_t k = 0; k < cr.size(); ++k)
      if (!same_pt(gp.crossings[k], cr[k].point))
        throw validation_error("graph model crossings disagree with the plan");
    size_t N = cr.size();
    std::vector<std::vector<Int>> G(N, std::vector<Int>(N, 0));
    for (size_t k = 0; k < N; ++k)
      for (size_t l = k; l < N; ++l) {
        Int v = k == l ? transversal_intersection(gp.fibers[k], gp.bent_fibers[k], yi)
                       : transversal_intersection(gp.fibers[k], gp.fibers[l], yi);
        G[k][l] = v;
        G[l][k] = v;
      }
    for (size_t s = 0; s < cnt; ++s)
      for (size_t t = 0; t < cnt; ++t)
        q.entries[base + s][base + t] =
            G[s][t] - G[s][t + 1] - G[s + 1][t] + G[s + 1][t + 1];
    base += cnt;
  }
  for (size_t a = 0; a < nA; ++a)
    for (size_t b = a + 1; b < nA; ++b)
      if (cy.floor_of[a] != cy.floor_of[b])
        put(a, b, transversal_intersection(cy.floor_cycles[a], cy.floor_cycles[b], x));
  for (size_t a = 0; a < nA; ++a) {
    for (size_t l = 0; l < nC; ++l)
      put(a, nA + l, transversal_intersection(cy.floor_cycles[a], cy.curve_pairing[l], x));
    put(a, n - 1, transversal_intersection(cy.floor_pairing[a], cy.vertical, x));
  }
  for (size_t l = 0; l < nC; ++l) {
    for (size_t m = l; m < nC; ++m)
      put(nA + l, nA + m,
          transversal_intersection(cy.curve_cycles[l], cy.curve_pairing[m], x));
    for (size_t b = 0; b < nC; ++b)
      put(nA + l, nA + nC + b,
          transversal_intersection(cy.break_cycles[b], cy.curve_pairing[l], x));
    put(nA + l, n - 1, transversal_intersection(cy.curve_pairing[l], cy.vertical, x));
  }
  q.entries[n - 1][n - 1] = Int(1);
  q.assumptions.push_back("vertical cycle self-pairing taken as +1");
  return q;
}

std::vector<int> face_closure(const TropicalComplex& x, const std::vector<int>& cells) {
  std::set<int> keep;
  for (int c : cells)
    for (int i = 0; i < x.size(); ++i)
      if (x.is_face(i, c)) keep.insert(i);
  return std::vector<int>(keep.begin(), keep.end());
}

// ---- the consolidated per-degree verifier ----

SurfaceVerifier::SurfaceVerifier(unsigned seed) : seed_(seed) {}

const SurfaceVerifier::Data& SurfaceVerifier::surface(int degree) {
  auto it = data_.find(degree);
  if (it == data_.end()) {
    FloorPlan plan = synth_plan(degree, seed_);
    TropicalPolynomial poly = surface_from_floor_plan(plan);
    TropicalComplex x = build_variety(poly, projective_ambient(3));
    FloorDecomposition fd = floor_decomposition(x, plan);
    SurfaceCycles cycles = basis_cycles(x, poly, plan, fd);
    IntersectionForm form = assemble_form(x, plan, fd, cycles);
    Signature sig = form_signature(form);
    it = data_
             .emplace(degree, Data{std::move(plan), std::move(poly), std::move(x),
                                   std::move(fd), std::move(cycles), std::move(form),
                                   std::move(sig)})
             .first;
  }
  return it->second;
}

const SurfaceVerifier::PairData& SurfaceVerifier::pair(int degree) {
  auto it = pairs_.find(degree);
  if (it == pairs_.end()) {
    if (degree < 2) throw input_error("pair models need degree at least two");
    TropicalPolynomial top = synth_curve(degree, seed_);
    TropicalPolynomial bottom = synth_curve(degree - 1, seed_);
    TropicalComplex y = graph_modification(top, bottom);
    GraphPairCycles cycles = graph_pair_cycles(y, top, bottom, true);
    IntersectionForm form = graph_pair_form(y, cycles);
    Signature sig = form_signature(form);
    it = pairs_
             .emplace(degree, PairData{std::move(y), std::move(cycles), std::move(form),
                                       std::move(sig)})
             .first;
  }
  return it->second;
}

const HodgeTable& SurfaceVerifier::surface_hodge(int degree) {
  auto it = hodge_.find(degree);
  if (it == hodge_.end()) it = hodge_.emplace(degree, hodge_table(surface(degree).x)).first;
  return it->second;
}

const HodgeTable& SurfaceVerifier::pair_hodge(int degree) {
  auto it = pair_hodge_.find(degree);
  if (it == pair_hodge_.end())
    it = pair_hodge_.emplace(degree, hodge_table(pair(degree).y)).first;
  return it->second;
}

namespace {

std::string fmt_sig(int pos, int neg, int nul) {
  return "(" + std::to_string(pos) + ", " + std::to_string(neg) + ", " +
         std::to_string(nul) + ")";
}

void add_check(SurfaceReport& r, const std::string& name, const std::string& want,
               const std::string& got) {
  SurfaceCheck c;
  c.name = name;
  c.expected = want;
  c.got = got;
  c.pass = want == got;
  r.pass = r.pass && c.pass;
  r.checks.push_back(std::move(c));
}

int rank_expected(int d) { return (2 * d * d * d - 6 * d * d + 7 * d) / 3; }
int floor_cycles_expected(int d) { return (d * d * d - 4 * d + 3) / 3; }
int loops_expected(int d) { return (d - 1) * (d - 2) * (d - 3) / 6; }
int genus_of(int d) { return (d - 1) * (d - 2) / 2; }

}  // namespace

SurfaceReport SurfaceVerifier::report(int degree) {
  SurfaceReport r;
  r.degree = degree;
  r.pass = true;
  const Data& sd = surface(degree);
  r.assumptions = sd.form.assumptions;
  add_check(r, "floor decomposed", "yes", is_floor_decomposed(sd.poly) ? "yes" : "no");
  std::string balanced = "yes";
  try {
    check_hypersurface_balancing(sd.x);
  } catch (const validation_error&) {
    balanced = "no";
  }
  add_check(r, "hypersurface balanced", "yes", balanced);
  int rank = surface_hodge(degree).groups[1][1].betti;
  add_check(r, "middle rank", std::to_string(rank_expected(degree)), std::to_string(rank));
  add_check(r, "floor cycles", std::to_string(floor_cycles_expected(degree)),
            std::to_string(sd.cycles.floor_cycles.size()));
  add_check(r, "curve loops", std::to_string(loops_expected(degree)),
            std::to_string(sd.cycles.curve_cycles.size()));
  add_check(r, "breaking duals", std::to_string(loops_expected(degree)),
            std::to_string(sd.cycles.break_cycles.size()));
  size_t basis = sd.cycles.floor_cycles.size() + 2 * sd.cycles.curve_cycles.size() + 1;
  add_check(r, "basis size", std::to_string(rank), std::to_string(basis));
  {
    FramedComplex f1(sd.x, 1);
    bool closed = is_cycle(sd.cycles.vertical, f1);
    for (const std::vector<FramedChain>* fam :
         {&sd.cycles.floor_cycles, &sd.cycles.floor_pairing, &sd.cycles.curve_cycles,
          &sd.cycles.curve_pairing, &sd.cycles.break_cycles})
      for (const FramedChain& c : *fam) closed = closed && is_cycle(c, f1);
    add_check(r, "cycles closed", "yes", closed ? "yes" : "no");
  }
  int b2 = loops_expected(degree);
  add_check(r, "signature", fmt_sig(1 + b2, rank_expected(degree) - 1 - b2, 0),
            fmt_sig(sd.sig.pos, sd.sig.neg, sd.sig.null));
  add_check(r, "asserted inputs", "1", std::to_string(sd.form.assumptions.size()));
  if (degree >= 2) {
    const PairData& pd = pair(degree);
    if (degree <= 4) {
      const HodgeTable& hy = pair_hodge(degree);
      add_check(r, "pair middle rank", std::to_string(degree * (degree - 1) + 1),
                std::to_string(hy.groups[1][1].betti));
      add_check(r, "pair upper rank", "0", std::to_string(hy.groups[1][2].betti));
    }
    size_t nf = pd.cycles.fibers.size();
    bool fib = true;
    for (size_t k = 0; k < nf; ++k)
      fib = fib && pd.form.entries[k][k] && *pd.form.entries[k][k] == -1;
    add_check(r, "fiber self-pairings", "all -1", fib ? "all -1" : "off");
    const std::optional<Int>& lv = pd.form.entries[nf][nf];
    add_check(r, "line self-pairing", "1", lv ? lv->str() : "unknown");
    add_check(r, "pair signature", fmt_sig(1, degree * (degree - 1), 0),
              fmt_sig(pd.sig.pos, pd.sig.neg, pd.sig.null));
    const Data& prev = surface(degree - 1);
    add_check(r, "signature additive", std::to_string(prev.sig.index() + pd.sig.index()),
              std::to_string(sd.sig.index()));
    int rec = surface_hodge(degree - 1).groups[1][1].betti + degree * (degree - 1) +
              2 * genus_of(degree - 1) - 1;
    add_check(r, "rank recursion", std::to_string(rec), std::to_string(rank));
  }
  if (degree >= 2 && degree <= 4) {
    int gw = genus_of(degree - 1);
    // The open wall is a cylinder over its curve and retracts to the
    // mid-height copy, where the framing group splits as the curve framings
    // plus the vertical line. Point classes come from both summands; the
    // vertically framed loop classes are the curve's weight-zero cycles.
    HodgeTable hw =
        hodge_table(sd.plan.complexes[static_cast<size_t>(degree) - 2]);
    int wall10 = hw.groups[1][0].betti + hw.groups[0][0].betti;
    int wall11 = hw.groups[0][1].betti;
    add_check(r, "wall retract ranks",
              "(" + std::to_string(gw + 1) + ", " + std::to_string(gw) + ")",
              "(" + std::to_string(wall10) + ", " + std::to_string(wall11) +
                  ")");
    const Subdivision& sub = sd.x.subdivision();
    std::vector<int> upper_f, lower_f;
    for (int c = 0; c < sd.x.size(); ++c) {
      const Cell& cc = sd.x.cell(c);
      if (cc.dim != 2 || !cc.sed.empty()) continue;
      bool start = true;
      long zmin = 0, zmax = 0;
      for (int pi : cc.dual) {
        long z = sub.points[static_cast<size_t>(pi)](2).convert_to<long>();
        if (start || z < zmin) zmin = z;
        if (start || z > zmax) zmax = z;
        start = false;
      }
      if (zmin >= 1) upper_f.push_back(c);
      if (zmax <= 1) lower_f.push_back(c);
    }
    std::vector<int> keep_top = face_closure(sd.x, upper_f);
    std::vector<int> keep_bot = face_closure(sd.x, lower_f);
    std::vector<int> keep_wall =
        face_closure(sd.x, sd.fd.wall_facets[static_cast<size_t>(degree) - 1]);
    std::vector<int> meet;
    std::set_intersection(keep_top.begin(), keep_top.end(), keep_bot.begin(),
                          keep_bot.end(), std::back_inserter(meet));
    add_check(r, "pieces meet in the wall", "yes", meet == keep_wall ? "yes" : "no");
    add_check(r, "upper piece taut", "0",
              std::to_string(hodge_table(sd.x, keep_top).groups[1][0].betti));
    add_check(r, "lower piece taut", "0",
              std::to_string(hodge_table(sd.x, keep_bot).groups[1][0].betti));
    std::string exact = "yes";
    try {
      FramedComplex f1(sd.x, 1);
      check_cover_exactness(f1, keep_top, keep_bot);
    } catch (const validation_error&) {
      exact = "no";
    }
    add_check(r, "cover exact", "yes", exact);
  }
  return r;
}

}  // namespace trop
