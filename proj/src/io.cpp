#include "trop/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trop/hull.hpp"

namespace trop {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("bad JSON: ") + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

Rat rat_from(const json& node) {
  if (node.is_string()) return parse_rat(node.get<std::string>());
  if (node.is_number_integer()) return Rat(node.get<long long>());
  throw input_error("expected a rational string");
}

json rat_array(const RatVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(format_rat(v(i)));
  return a;
}

// ---------------------------------------------------------------------------
// polynomial and floor plan documents

json poly_node(const TropicalPolynomial& f) {
  json doc;
  doc["dim"] = f.vars();
  doc["degree"] = f.degree();
  json terms = json::array();
  for (int i = 0; i < f.terms(); ++i) {
    json t;
    t["e"] = to_longs(f.exponents()[static_cast<size_t>(i)]);
    t["c"] = format_rat(f.coefficients()[static_cast<size_t>(i)]);
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

TropicalPolynomial poly_from_node(const json& doc) {
  try {
    if (!doc.is_object()) throw input_error("polynomial document must be an object");
    int dim = doc.at("dim").get<int>();
    if (dim < 1) throw input_error("dim must be at least one");
    const json& terms = doc.at("terms");
    if (!terms.is_array() || terms.empty())
      throw input_error("polynomial needs at least one term");
    std::vector<IntVec> exps;
    std::vector<Rat> coefs;
    for (const json& t : terms) {
      const json& e = t.at("e");
      if (!e.is_array() || static_cast<int>(e.size()) != dim)
        throw input_error("term exponent must list one entry per variable");
      IntVec ev(dim);
      for (int j = 0; j < dim; ++j) {
        if (!e[static_cast<size_t>(j)].is_number_integer())
          throw input_error("exponents must be integers");
        ev(j) = Int(e[static_cast<size_t>(j)].get<long long>());
      }
      exps.push_back(std::move(ev));
      coefs.push_back(rat_from(t.at("c")));
    }
    TropicalPolynomial f(std::move(exps), std::move(coefs));
    int declared = doc.at("degree").get<int>();
    if (declared != f.degree())
      throw input_error("declared degree " + std::to_string(declared) +
                        " does not match the terms (degree " +
                        std::to_string(f.degree()) + ")");
    return f;
  } catch (const json::exception& e) {
    throw input_error(std::string("bad polynomial document: ") + e.what());
  }
}

json plan_node(const PlanDoc& doc) {
  json out;
  json curves = json::array();
  for (const TropicalPolynomial& c : doc.curves) curves.push_back(poly_node(c));
  out["curves"] = std::move(curves);
  if (!doc.heights.empty()) {
    json hs = json::array();
    for (const Rat& h : doc.heights) hs.push_back(format_rat(h));
    out["heights"] = std::move(hs);
  }
  return out;
}

PlanDoc plan_from_node(const json& doc) {
  try {
    const json& curves = doc.at("curves");
    if (!curves.is_array() || curves.empty())
      throw input_error("floor plan needs at least one curve");
    PlanDoc out;
    for (const json& c : curves) out.curves.push_back(poly_from_node(c));
    if (doc.contains("heights")) {
      const json& hs = doc.at("heights");
      if (!hs.is_array()) throw input_error("heights must be an array");
      for (const json& h : hs) out.heights.push_back(rat_from(h));
    }
    return out;
  } catch (const json::exception& e) {
    throw input_error(std::string("bad floor plan document: ") + e.what());
  }
}

TropicalPolynomial surface_from_plan_doc(const PlanDoc& doc) {
  FloorPlan plan = plan_from_curves(doc.curves);
  return doc.heights.empty() ? surface_from_floor_plan(plan)
                             : surface_from_floor_plan(plan, doc.heights);
}

// ---------------------------------------------------------------------------
// report documents

json subdivision_doc(const Subdivision& s, const PrimitivityReport& pr) {
  json doc;
  json pts = json::array();
  for (const IntVec& p : s.points) pts.push_back(to_longs(p));
  doc["points"] = std::move(pts);
  json cells = json::array();
  for (const DualCell& c : s.cells) {
    json node;
    node["dim"] = c.dim;
    node["support"] = c.support;
    node["faces"] = c.faces;
    if (c.vertex.size() > 0) node["vertex"] = rat_array(c.vertex);
    cells.push_back(std::move(node));
  }
  doc["cells"] = std::move(cells);
  doc["top_dim"] = s.top_dim;
  doc["primitive"] = pr.primitive;
  if (!pr.primitive) doc["offending_cell"] = pr.offending_cell;
  return doc;
}

json complex_doc(const TropicalComplex& x) {
  json doc;
  json amb;
  amb["kind"] = x.ambient().kind == AmbientKind::projective ? "projective" : "toric";
  amb["n"] = x.ambient().n;
  json rays = json::array();
  for (const IntVec& r : x.ambient().rays) rays.push_back(to_longs(r));
  amb["rays"] = std::move(rays);
  doc["ambient"] = std::move(amb);
  doc["dim"] = x.dim();

  std::vector<int> counts(static_cast<size_t>(x.dim()) + 1, 0);
  json cells = json::array();
  for (int i = 0; i < x.size(); ++i) {
    const Cell& c = x.cell(i);
    ++counts[static_cast<size_t>(c.dim)];
    json node;
    node["id"] = i;
    node["dim"] = c.dim;
    node["sed"] = c.sed;
    node["dual"] = c.dual;
    json verts = json::array();
    for (Eigen::Index j = 0; j < c.vertices.cols(); ++j)
      verts.push_back(rat_array(c.vertices.col(j)));
    node["vertices"] = std::move(verts);
    json crays = json::array();
    for (Eigen::Index j = 0; j < c.rays.cols(); ++j)
      crays.push_back(to_longs(c.rays.col(j)));
    node["rays"] = std::move(crays);
    node["facets"] = c.facets;
    node["signs"] = c.facet_signs;
    cells.push_back(std::move(node));
  }
  doc["cells"] = std::move(cells);
  doc["counts"] = counts;
  return doc;
}

json group_node(const HomologyGroup& g) {
  json node;
  node["rank"] = g.betti;
  json tor = json::array();
  for (const Int& f : g.torsion) tor.push_back(f.str());
  node["torsion"] = std::move(tor);
  return node;
}

json hodge_doc(const HodgeTable& t, const std::string& ambient) {
  json doc;
  doc["ambient"] = ambient;
  json rows = json::array();
  for (const auto& row : t.groups) {
    json cols = json::array();
    for (const HomologyGroup& g : row) cols.push_back(group_node(g));
    rows.push_back(std::move(cols));
  }
  doc["h"] = std::move(rows);
  std::vector<int> betti;
  if (!t.groups.empty()) {
    betti.assign(t.groups[0].size(), 0);
    for (const auto& row : t.groups)
      for (size_t q = 0; q < row.size(); ++q) betti[q] += row[q].betti;
  }
  doc["betti"] = betti;
  doc["torsion"] = t.has_torsion;
  return doc;
}

json piece_node(const ChainPiece& p) {
  json node;
  node["host"] = p.host;
  node["weight"] = p.weight.str();
  node["framing"] = to_longs(p.framing);
  node["a"] = rat_array(p.a);
  if (p.bounded) {
    node["b"] = rat_array(p.b);
  } else {
    node["dir"] = to_longs(p.dir);
    node["limit"] = p.limit;
  }
  return node;
}

// chains in label order: the n-th label of each block tags the n-th chain
// of the matching family
void labelled_chains(const IntersectionForm& q, const SurfaceCycles& cy,
                     std::vector<std::string>& names,
                     std::vector<FramedChain>& chains) {
  size_t ia = 0, ic = 0, ib = 0;
  for (size_t i = 0; i < q.labels.size(); ++i) {
    switch (q.block[i]) {
      case 'A': chains.push_back(cy.floor_cycles.at(ia++)); break;
      case 'C': chains.push_back(cy.curve_cycles.at(ic++)); break;
      case 'B': chains.push_back(cy.break_cycles.at(ib++)); break;
      default: chains.push_back(cy.vertical); break;
    }
    names.push_back(q.labels[i]);
  }
}

json form_doc(const IntersectionForm& q, const Signature& sig,
              const SurfaceCycles& cy) {
  json doc;
  doc["labels"] = q.labels;
  std::string blocks;
  for (char b : q.block) blocks.push_back(b);
  doc["blocks"] = blocks;
  json matrix = json::array();
  for (const auto& row : q.entries) {
    json r = json::array();
    for (const auto& e : row) {
      if (e) r.push_back(e->str());
      else r.push_back(nullptr);
    }
    matrix.push_back(std::move(r));
  }
  doc["matrix"] = std::move(matrix);
  json s;
  s["pos"] = sig.pos;
  s["neg"] = sig.neg;
  s["null"] = sig.null;
  doc["signature"] = std::move(s);
  doc["assumptions"] = q.assumptions;

  std::vector<std::string> names;
  std::vector<FramedChain> chains;
  labelled_chains(q, cy, names, chains);
  json cycles = json::array();
  for (size_t i = 0; i < chains.size(); ++i) {
    json node;
    node["label"] = names[i];
    json pieces = json::array();
    for (const ChainPiece& p : chains[i].pieces) pieces.push_back(piece_node(p));
    node["pieces"] = std::move(pieces);
    cycles.push_back(std::move(node));
  }
  doc["cycles"] = std::move(cycles);
  return doc;
}

// ---------------------------------------------------------------------------
// OBJ export

// decimal expansion truncated after twelve fractional digits
std::string fixed12(const Rat& r) {
  static const Int scale("1000000000000");
  Int n = num(r), d = den(r);
  bool neg = n < 0;
  if (neg) n = -n;
  Int ip = n / d;
  Int frac = ((n - ip * d) * scale) / d;
  std::string out = ip.str();
  if (frac != 0) {
    std::string fs = frac.str();
    fs.insert(fs.begin(), 12 - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();
    out += "." + fs;
  }
  if (neg && (ip != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

struct ObjWriter {
  std::ostringstream out;
  std::map<std::array<std::string, 3>, int> seen;
  int count = 0;

  int vertex(const RatVec& p) {
    std::array<std::string, 3> key{fixed12(p(0)), fixed12(p(1)), fixed12(p(2))};
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    out << "v " << key[0] << ' ' << key[1] << ' ' << key[2] << "\n";
    seen.emplace(key, ++count);
    return count;
  }
};

// Vertices of the facet clipped to [-R, R]^3, in cyclic boundary order.
// The facet plane is parametrized by the tangent basis at a base vertex and
// every constraint becomes a half-plane there; vertices are enumerated from
// tight constraint pairs, so the result is exact.
std::vector<RatVec> clip_facet(const Cell& c, const Rat& R) {
  if (c.vertices.cols() == 0 || c.tangent.cols() != 2) return {};
  RatVec v0 = c.vertices.col(0);
  RatMat t = to_rat(c.tangent);

  std::vector<std::pair<RatVec, Rat>> rows;  // g . u <= h
  for (int k = 0; k < 3; ++k) {
    RatVec g = t.row(k).transpose();
    rows.emplace_back(g, R - v0(k));
    rows.emplace_back(RatVec(-g), R + v0(k));
  }
  for (const RatVec& w : c.ineq) {
    RatVec w3 = w.head(3);
    RatVec g = t.transpose() * w3;
    rows.emplace_back(g, -w(3) - w3.dot(v0));
  }

  std::vector<RatVec> us;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      const RatVec &gi = rows[i].first, &gj = rows[j].first;
      Rat det = gi(0) * gj(1) - gi(1) * gj(0);
      if (det == 0) continue;
      RatVec u(2);
      u(0) = (rows[i].second * gj(1) - rows[j].second * gi(1)) / det;
      u(1) = (gi(0) * rows[j].second - gj(0) * rows[i].second) / det;
      bool ok = true;
      for (const auto& r : rows)
        if (r.first(0) * u(0) + r.first(1) * u(1) > r.second) {
          ok = false;
          break;
        }
      if (!ok) continue;
      bool dup = false;
      for (const RatVec& v : us)
        if (v(0) == u(0) && v(1) == u(1)) {
          dup = true;
          break;
        }
      if (!dup) us.push_back(std::move(u));
    }
  }
  if (us.size() < 3) return {};

  RatVec cen = RatVec::Zero(2);
  for (const RatVec& u : us) cen += u;
  cen /= Rat(static_cast<long>(us.size()));
  auto half = [](const RatVec& p) {
    return (p(1) < 0 || (p(1) == 0 && p(0) < 0)) ? 1 : 0;
  };
  std::sort(us.begin(), us.end(), [&](const RatVec& a, const RatVec& b) {
    RatVec pa = a - cen, pb = b - cen;
    int ha = half(pa), hb = half(pb);
    if (ha != hb) return ha < hb;
    return pa(0) * pb(1) - pa(1) * pb(0) > 0;
  });

  std::vector<RatVec> out;
  for (const RatVec& u : us) out.push_back(RatVec(v0 + t * u));
  return out;
}

// clip a chain piece to the box; false when nothing of positive length is left
bool clip_piece(const ChainPiece& p, const Rat& R, RatVec& a, RatVec& b) {
  if (p.a.size() != 3) return false;
  RatVec base = p.a;
  RatVec d = p.bounded ? RatVec(p.b - p.a) : to_rat(p.dir);
  Rat lo = 0, hi = 1;
  bool open = !p.bounded;
  for (int k = 0; k < 3; ++k) {
    if (d(k) == 0) {
      if (base(k) < -R || base(k) > R) return false;
      continue;
    }
    Rat t1 = (R - base(k)) / d(k), t0 = (Rat(-1) * R - base(k)) / d(k);
    if (t0 > t1) std::swap(t0, t1);
    if (t0 > lo) lo = t0;
    if (open) {
      hi = t1;
      open = false;
    } else if (t1 < hi) {
      hi = t1;
    }
  }
  if (open || !(lo < hi)) return false;
  a = base + d * lo;
  b = base + d * hi;
  return true;
}

struct ObjStats {
  int facets = 0;
  int triangles = 0;
  int segments = 0;
  int vertices = 0;
};

std::string build_surface_obj(const TropicalComplex& x, const Rat& box,
                              ObjStats* stats) {
  if (box <= 0) throw input_error("bbox must be positive");
  ObjWriter w;
  w.out << "o surface\n";
  ObjStats st;
  for (int ci : x.cells_of_dim(2)) {
    const Cell& c = x.cell(ci);
    if (!c.sed.empty()) continue;
    std::vector<RatVec> poly = clip_facet(c, box);
    if (poly.size() < 3) continue;
    ++st.facets;
    w.out << "g f" << ci << "\n";
    std::vector<int> ids;
    for (const RatVec& p : poly) ids.push_back(w.vertex(p));
    for (size_t k = 1; k + 1 < ids.size(); ++k) {
      if (ids[0] == ids[k] || ids[k] == ids[k + 1] || ids[0] == ids[k + 1]) continue;
      w.out << "f " << ids[0] << ' ' << ids[k] << ' ' << ids[k + 1] << "\n";
      ++st.triangles;
    }
  }
  st.vertices = w.count;
  if (stats) *stats = st;
  return w.out.str();
}

std::string build_cycles_obj(const std::vector<std::string>& names,
                             const std::vector<FramedChain>& chains,
                             const Rat& box, ObjStats* stats) {
  if (box <= 0) throw input_error("bbox must be positive");
  if (names.size() != chains.size())
    throw input_error("one name per chain required");
  ObjWriter w;
  w.out << "o cycles\n";
  ObjStats st;
  for (size_t i = 0; i < chains.size(); ++i) {
    w.out << "g " << names[i] << "\n";
    for (const ChainPiece& p : chains[i].pieces) {
      RatVec a, b;
      if (!clip_piece(p, box, a, b)) continue;
      int ia = w.vertex(a), ib = w.vertex(b);
      if (ia == ib) continue;
      w.out << "l " << ia << ' ' << ib << "\n";
      ++st.segments;
    }
  }
  st.vertices = w.count;
  if (stats) *stats = st;
  return w.out.str();
}

// ---------------------------------------------------------------------------
// commands

std::string pick(const std::string& out, const char* fallback) {
  return out.empty() ? std::string(fallback) : out;
}

Ambient ambient_for(const std::string& name, const TropicalPolynomial& f) {
  if (name == "tp3") {
    if (f.vars() != 3)
      throw input_error("ambient tp3 needs a polynomial in three variables");
    return projective_ambient(3);
  }
  if (name == "tp2") {
    if (f.vars() != 2)
      throw input_error("ambient tp2 needs a polynomial in two variables");
    return projective_ambient(2);
  }
  if (name != "toric")
    throw input_error("ambient must be one of tp3, tp2, toric");
  std::vector<IntVec> verts;
  for (int i : polytope_vertices(to_rat_pts(f.exponents())))
    verts.push_back(f.exponents()[static_cast<size_t>(i)]);
  return polytope_ambient(verts);
}

int cmd_subdivide(const std::string& input, const std::string& out) {
  TropicalPolynomial f = poly_from_json(read_file(input));
  Subdivision s = dual_subdivision(f);
  PrimitivityReport pr = is_primitive(s);
  std::string path = pick(out, "subdivision.json");
  write_file(path, dump(subdivision_doc(s, pr)));
  std::cout << "subdivision: " << s.cells.size() << " cells, "
            << s.top_cells().size() << " of top dimension " << s.top_dim << "\n";
  if (pr.primitive)
    std::cout << "primitive: yes\n";
  else
    std::cout << "primitive: no (cell " << pr.offending_cell << ")\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_surface(const std::string& input, const std::string& ambient,
                const std::string& out) {
  TropicalPolynomial f = surface_from_document(read_file(input));
  TropicalComplex x = build_variety(f, ambient_for(ambient, f));
  validate_cw(x);
  std::string path = pick(out, "surface.json");
  write_file(path, dump(complex_doc(x)));
  std::vector<int> counts(static_cast<size_t>(x.dim()) + 1, 0);
  for (const Cell& c : x.cells()) ++counts[static_cast<size_t>(c.dim)];
  std::cout << "variety of dimension " << x.dim() << ": " << x.size()
            << " cells (";
  for (size_t d = 0; d < counts.size(); ++d)
    std::cout << (d ? " " : "") << counts[d];
  std::cout << " by dimension); cell structure validated\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_homology(const std::string& input, const std::string& ambient, int p,
                 int q, const std::string& out) {
  TropicalPolynomial f = surface_from_document(read_file(input));
  TropicalComplex x = build_variety(f, ambient_for(ambient, f));
  validate_cw(x);
  HodgeTable t = hodge_table(x);
  std::string path = pick(out, "report.json");
  if ((p >= 0) != (q >= 0))
    throw input_error("give both --p and --q or neither");
  if (p >= 0) {
    if (p > x.dim() || q > x.dim())
      throw input_error("indices exceed the variety dimension");
    const HomologyGroup& g =
        t.groups[static_cast<size_t>(p)][static_cast<size_t>(q)];
    json doc;
    doc["ambient"] = ambient;
    doc["p"] = p;
    doc["q"] = q;
    doc["entry"] = group_node(g);
    write_file(path, dump(doc));
    std::cout << "h(" << p << "," << q << ") = " << g.betti;
    if (!g.torsion.empty()) {
      std::cout << " with torsion";
      for (const Int& tf : g.torsion) std::cout << " " << tf.str();
    }
    std::cout << "\n";
  } else {
    write_file(path, dump(hodge_doc(t, ambient)));
    std::cout << "h(p,q) ranks, p rows and q columns:\n";
    for (const auto& row : t.groups) {
      std::cout << " ";
      for (const HomologyGroup& g : row) std::cout << " " << g.betti;
      std::cout << "\n";
    }
    if (t.has_torsion) std::cout << "torsion present\n";
  }
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_floorplan(const std::string& input, const std::string& out) {
  TropicalPolynomial f = surface_from_document(read_file(input));
  FloorPlan plan = floor_plan(f);
  std::string path = pick(out, "plan.json");
  write_file(path, dump(plan_node(PlanDoc{plan.curves, {}})));
  std::cout << "floor plan of degree " << plan.degree << "; crossing counts:";
  for (const auto& cr : plan.crossings) std::cout << " " << cr.size();
  std::cout << "\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_synth(int degree, unsigned seed, const std::string& out,
              const std::string& plan_out) {
  if (degree < 1) throw input_error("degree must be at least one");
  TropicalPolynomial f = synth_surface(degree, seed);
  PrimitivityReport pr = is_primitive(dual_subdivision(f));
  if (!pr.primitive || !is_floor_decomposed(f))
    throw validation_error("synthesized surface failed its own checks");
  std::string path = pick(out, "poly.json");
  write_file(path, dump(poly_node(f)));
  std::cout << "degree " << degree << " surface, seed " << seed << ": "
            << f.terms() << " terms; primitive and floor decomposed\n";
  std::cout << "wrote " << path << "\n";
  if (!plan_out.empty()) {
    FloorPlan plan = synth_plan(degree, seed);
    write_file(plan_out, dump(plan_node(PlanDoc{plan.curves, {}})));
    std::cout << "wrote " << plan_out << "\n";
  }
  return 0;
}

int cmd_intersect(const std::string& input, const std::string& out) {
  TropicalPolynomial f = surface_from_document(read_file(input));
  if (f.vars() != 3)
    throw input_error("intersection forms need a surface in three variables");
  FloorPlan plan = floor_plan(f);
  TropicalComplex x = build_variety(f, projective_ambient(3));
  FloorDecomposition fd = floor_decomposition(x, plan);
  SurfaceCycles cy = basis_cycles(x, f, plan, fd);
  IntersectionForm form = assemble_form(x, plan, fd, cy);
  Signature sig = form_signature(form);
  std::string path = pick(out, "report.json");
  write_file(path, dump(form_doc(form, sig, cy)));
  std::cout << "intersection form on " << form.labels.size()
            << " cycles: signature (" << sig.pos << ", " << sig.neg << ", "
            << sig.null << ")\n";
  for (const std::string& a : sig.assumptions)
    std::cout << "asserted input: " << a << "\n";
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_verify(int max_degree, unsigned seed, const std::string& out) {
  if (max_degree < 1 || max_degree > 5)
    throw input_error("verify covers degrees 1 through 5");
  SurfaceVerifier v(seed);
  json degrees = json::array();
  bool all = true;
  int failed = 0;
  for (int d = 1; d <= max_degree; ++d) {
    SurfaceReport r = v.report(d);
    std::cout << "degree " << d << "\n";
    json checks = json::array();
    for (const SurfaceCheck& c : r.checks) {
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": "
                << c.got;
      if (!c.pass) std::cout << " (expected " << c.expected << ")";
      std::cout << "\n";
      if (!c.pass) ++failed;
      json node;
      node["name"] = c.name;
      node["expected"] = c.expected;
      node["got"] = c.got;
      node["pass"] = c.pass;
      checks.push_back(std::move(node));
    }
    json row;
    row["degree"] = d;
    row["pass"] = r.pass;
    row["checks"] = std::move(checks);
    row["assumptions"] = r.assumptions;
    degrees.push_back(std::move(row));
    all = all && r.pass;
  }
  json doc;
  doc["max_degree"] = max_degree;
  doc["seed"] = seed;
  doc["pass"] = all;
  doc["degrees"] = std::move(degrees);
  std::string path = pick(out, "report.json");
  write_file(path, dump(doc));
  if (all)
    std::cout << "degrees 1.." << max_degree << ": all checks passed\n";
  else
    std::cout << "degrees 1.." << max_degree << ": " << failed
              << " checks FAILED\n";
  std::cout << "wrote " << path << "\n";
  return all ? 0 : 4;
}

int cmd_export(const std::string& input, const std::string& bbox,
               const std::string& out, const std::string& cycles_out) {
  Rat box = parse_rat(bbox);
  if (box <= 0) throw input_error("bbox must be positive");
  TropicalPolynomial f = surface_from_document(read_file(input));
  if (f.vars() != 3)
    throw input_error("export needs a surface in three variables");
  TropicalComplex x = build_variety(f, projective_ambient(3));
  ObjStats st;
  std::string path = pick(out, "surface.obj");
  write_file(path, build_surface_obj(x, box, &st));
  std::cout << "clipped two-skeleton: " << st.facets << " facets, "
            << st.triangles << " triangles, " << st.vertices << " vertices\n";
  std::cout << "wrote " << path << "\n";
  if (!cycles_out.empty()) {
    FloorPlan plan = floor_plan(f);
    FloorDecomposition fd = floor_decomposition(x, plan);
    SurfaceCycles cy = basis_cycles(x, f, plan, fd);
    IntersectionForm form = assemble_form(x, plan, fd, cy);
    std::vector<std::string> names;
    std::vector<FramedChain> chains;
    labelled_chains(form, cy, names, chains);
    ObjStats cst;
    write_file(cycles_out, build_cycles_obj(names, chains, box, &cst));
    std::cout << "cycle basis: " << chains.size() << " chains, " << cst.segments
              << " clipped segments\n";
    std::cout << "wrote " << cycles_out << "\n";
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// public wrappers

std::string poly_to_json(const TropicalPolynomial& f) {
  return dump(poly_node(f));
}

TropicalPolynomial poly_from_json(const std::string& text) {
  return poly_from_node(parse_json(text));
}

std::string plan_to_json(const PlanDoc& doc) { return dump(plan_node(doc)); }

PlanDoc plan_from_json(const std::string& text) {
  return plan_from_node(parse_json(text));
}

TropicalPolynomial surface_from_document(const std::string& text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("curves"))
    return surface_from_plan_doc(plan_from_node(doc));
  return poly_from_node(doc);
}

std::string surface_obj(const TropicalComplex& x, const Rat& box) {
  return build_surface_obj(x, box, nullptr);
}

std::string cycles_obj(const std::vector<std::string>& names,
                       const std::vector<FramedChain>& chains, const Rat& box) {
  return build_cycles_obj(names, chains, box, nullptr);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact toolkit for tropical surfaces in projective 3-space"};
  app.require_subcommand(1);

  std::string input, out, ambient = "tp3", bbox, cycles_out, plan_out;
  int p = -1, q = -1, degree = 0, max_degree = 5;
  unsigned seed = 7;

  CLI::App* c_sub = app.add_subcommand(
      "subdivide", "dual subdivision of a polynomial, with a primitivity verdict");
  c_sub->add_option("input", input, "polynomial document")->required();
  c_sub->add_option("--out", out, "output path (subdivision.json)");

  CLI::App* c_surf = app.add_subcommand(
      "surface", "build and validate the compactified variety, dump its cells");
  c_surf->add_option("input", input, "polynomial or floor plan document")->required();
  c_surf->add_option("--ambient", ambient, "tp3, tp2 or toric (default tp3)");
  c_surf->add_option("--out", out, "output path (surface.json)");

  CLI::App* c_hom = app.add_subcommand(
      "homology", "framed homology table of the variety");
  c_hom->add_option("input", input, "polynomial or floor plan document")->required();
  c_hom->add_option("--ambient", ambient, "tp3, tp2 or toric (default tp3)");
  c_hom->add_option("--p", p, "framing power of a single entry");
  c_hom->add_option("--q", q, "degree of a single entry");
  c_hom->add_option("--out", out, "output path (report.json)");

  CLI::App* c_plan = app.add_subcommand(
      "floorplan", "extract the stack of plane curves under a surface");
  c_plan->add_option("input", input, "polynomial document")->required();
  c_plan->add_option("--out", out, "output path (plan.json)");

  CLI::App* c_synth = app.add_subcommand(
      "synth", "generate a floor decomposed surface of the given degree");
  c_synth->add_option("--degree", degree, "surface degree")->required();
  c_synth->add_option("--seed", seed, "generator seed (default 7)");
  c_synth->add_option("--plan", plan_out, "also write the floor plan here");
  c_synth->add_option("--out", out, "output path (poly.json)");

  CLI::App* c_int = app.add_subcommand(
      "intersect", "cycle basis and intersection form of a floor decomposed surface");
  c_int->add_option("input", input, "polynomial or floor plan document")->required();
  c_int->add_option("--out", out, "output path (report.json)");

  CLI::App* c_ver = app.add_subcommand(
      "verify", "run every invariant check degree by degree");
  c_ver->add_option("--max-degree", max_degree, "top degree, at most 5");
  c_ver->add_option("--seed", seed, "generator seed (default 7)");
  c_ver->add_option("--out", out, "output path (report.json)");

  CLI::App* c_exp = app.add_subcommand(
      "export", "clipped OBJ geometry of the surface");
  c_exp->add_option("input", input, "polynomial or floor plan document")->required();
  c_exp->add_option("--bbox", bbox, "half-width of the clip box, rational")->required();
  c_exp->add_option("--cycles", cycles_out, "also write the cycle basis here");
  c_exp->add_option("--out", out, "output path (surface.obj)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_sub->parsed()) return cmd_subdivide(input, out);
    if (c_surf->parsed()) return cmd_surface(input, ambient, out);
    if (c_hom->parsed()) return cmd_homology(input, ambient, p, q, out);
    if (c_plan->parsed()) return cmd_floorplan(input, out);
    if (c_synth->parsed()) return cmd_synth(degree, seed, out, plan_out);
    if (c_int->parsed()) return cmd_intersect(input, out);
    if (c_ver->parsed()) return cmd_verify(max_degree, seed, out);
    if (c_exp->parsed()) return cmd_export(input, bbox, out, cycles_out);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace trop
