#include "trop/troppoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace trop {

TropicalPolynomial::TropicalPolynomial(std::vector<IntVec> exponents,
                                       std::vector<Rat> coefficients)
    : exps_(std::move(exponents)), coefs_(std::move(coefficients)) {
  if (exps_.empty()) throw input_error("polynomial needs at least one term");
  if (exps_.size() != coefs_.size())
    throw input_error("polynomial term count mismatch");
  const int n = static_cast<int>(exps_[0].size());
  for (const auto& e : exps_) {
    if (static_cast<int>(e.size()) != n)
      throw input_error("polynomial exponent arity mismatch");
    for (Eigen::Index i = 0; i < e.size(); ++i)
      if (e(i) < 0) throw input_error("negative exponent in polynomial");
  }
  std::vector<int> order(exps_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(exps_[static_cast<size_t>(a)], exps_[static_cast<size_t>(b)]);
  });
  std::vector<IntVec> se;
  std::vector<Rat> sc;
  se.reserve(exps_.size());
  sc.reserve(coefs_.size());
  for (int i : order) {
    if (!se.empty() && is_zero(IntVec(se.back() - exps_[static_cast<size_t>(i)])))
      throw input_error("duplicate exponent in polynomial");
    se.push_back(exps_[static_cast<size_t>(i)]);
    sc.push_back(coefs_[static_cast<size_t>(i)]);
  }
  exps_ = std::move(se);
  coefs_ = std::move(sc);
}

int TropicalPolynomial::degree() const {
  Int best = 0;
  for (const auto& e : exps_) {
    Int t = e.sum();
    if (t > best) best = t;
  }
  return best.convert_to<int>();
}

Rat TropicalPolynomial::evaluate(const RatVec& x) const {
  if (x.size() != vars()) throw validation_error("evaluate: wrong dimension");
  Rat best;
  bool first = true;
  for (size_t i = 0; i < exps_.size(); ++i) {
    Rat v = coefs_[i] + to_rat(exps_[i]).dot(x);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

std::vector<int> TropicalPolynomial::argmax(const RatVec& x) const {
  Rat best = evaluate(x);
  std::vector<int> out;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (coefs_[i] + to_rat(exps_[i]).dot(x) == best) out.push_back(static_cast<int>(i));
  return out;
}

std::string TropicalPolynomial::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << " + ";
    os << format_rat(coefs_[i]) << "(";
    for (Eigen::Index j = 0; j < exps_[i].size(); ++j) {
      if (j) os << ",";
      os << exps_[i](j).str();
    }
    os << ")";
  }
  return os.str();
}

TropicalPolynomial parse_poly(const std::string& s, int vars, int max_degree) {
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  if (pos == s.size()) throw input_error("empty polynomial");
  while (pos < s.size()) {
    // coefficient: everything up to '(' or '+' or end
    size_t start = pos;
    while (pos < s.size() && s[pos] != '(' && s[pos] != '+') ++pos;
    Rat coef = parse_rat(s.substr(start, pos - start));
    IntVec e = IntVec::Zero(vars);
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      for (int j = 0; j < vars; ++j) {
        size_t estart = pos;
        while (pos < s.size() && s[pos] != ',' && s[pos] != ')') ++pos;
        if (pos == s.size()) throw input_error("unterminated exponent list");
        Rat v = parse_rat(s.substr(estart, pos - estart));
        if (den(v) != 1) throw input_error("exponents must be integers");
        e(j) = num(v);
        char expect = (j + 1 == vars) ? ')' : ',';
        if (s[pos] != expect) throw input_error("exponent list has wrong arity");
        ++pos;
      }
    }
    if (max_degree >= 0 && e.sum() > max_degree)
      throw input_error("exponent outside the degree-" + std::to_string(max_degree) +
                        " simplex");
    exps.push_back(e);
    coefs.push_back(coef);
    skip_ws();
    if (pos == s.size()) break;
    if (s[pos] != '+') throw input_error("expected '+' between polynomial terms");
    ++pos;
    skip_ws();
    if (pos == s.size()) throw input_error("trailing '+' in polynomial");
  }
  return TropicalPolynomial(std::move(exps), std::move(coefs));
}

int Subdivision::index_of(const std::vector<int>& support) const {
  auto it = lookup_.find(support);
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> Subdivision::top_cells() const {
  std::vector<int> out;
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == top_dim) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<RatVec> Subdivision::cell_points(int cell) const {
  std::vector<RatVec> out;
  for (int i : cells[static_cast<size_t>(cell)].support)
    out.push_back(to_rat(points[static_cast<size_t>(i)]));
  return out;
}

Subdivision dual_subdivision(const TropicalPolynomial& f) {
  Subdivision s;
  s.points = f.exponents();
  auto hull = upper_hull(s.points, f.coefficients());

  // gather all faces of all top cells
  std::map<std::vector<int>, RatVec> topVertex;
  std::set<std::vector<int>> faceSet;
  for (const auto& cell : hull) {
    topVertex[cell.support] = -cell.linear;
    std::vector<RatVec> pts;
    for (int i : cell.support) pts.push_back(to_rat(s.points[static_cast<size_t>(i)]));
    for (auto& face : polytope_faces(pts)) {
      std::vector<int> global;
      global.reserve(face.size());
      for (int k : face) global.push_back(cell.support[static_cast<size_t>(k)]);
      faceSet.insert(std::move(global));
    }
  }

  std::vector<std::pair<int, std::vector<int>>> ordered;  // (dim, support)
  for (const auto& sup : faceSet) {
    std::vector<RatVec> pts;
    for (int i : sup) pts.push_back(to_rat(s.points[static_cast<size_t>(i)]));
    ordered.push_back({affine_dim(pts), sup});
  }
  std::sort(ordered.begin(), ordered.end());

  s.top_dim = ordered.empty() ? 0 : ordered.back().first;
  for (const auto& [dim, sup] : ordered) {
    DualCell c;
    c.support = sup;
    c.dim = dim;
    auto tv = topVertex.find(sup);
    if (tv != topVertex.end() && dim == s.top_dim) c.vertex = tv->second;
    s.lookup_[sup] = static_cast<int>(s.cells.size());
    s.cells.push_back(std::move(c));
  }

  // covering faces via the facet enumeration of each cell
  for (auto& c : s.cells) {
    if (c.dim == 0) continue;
    std::vector<RatVec> pts;
    for (int i : c.support) pts.push_back(to_rat(s.points[static_cast<size_t>(i)]));
    for (const auto& facet : polytope_facets(pts)) {
      std::vector<int> global;
      global.reserve(facet.support.size());
      for (int k : facet.support) global.push_back(c.support[static_cast<size_t>(k)]);
      int idx = s.index_of(global);
      if (idx < 0) throw validation_error("subdivision is not closed under faces");
      c.faces.push_back(idx);
    }
    std::sort(c.faces.begin(), c.faces.end());
  }
  return s;
}

PrimitivityReport is_primitive(const Subdivision& s) {
  for (int t : s.top_cells()) {
    const auto& cell = s.cells[static_cast<size_t>(t)];
    bool ok = static_cast<int>(cell.support.size()) == cell.dim + 1;
    if (ok) {
      std::vector<IntVec> pts;
      for (int i : cell.support) pts.push_back(s.points[static_cast<size_t>(i)]);
      ok = normalized_volume(pts) == 1;
    }
    if (!ok) return {false, t};
  }
  return {true, -1};
}

TropicalPolynomial restrict_to_level(const TropicalPolynomial& f, int level) {
  const int n = f.vars();
  if (n < 1) throw validation_error("restrict_to_level needs at least one variable");
  std::vector<IntVec> exps;
  std::vector<Rat> coefs;
  for (int i = 0; i < f.terms(); ++i) {
    const IntVec& e = f.exponents()[static_cast<size_t>(i)];
    if (e(n - 1) != level) continue;
    exps.push_back(e.head(n - 1));
    coefs.push_back(f.coefficients()[static_cast<size_t>(i)]);
  }
  if (exps.empty())
    throw validation_error("no terms at level " + std::to_string(level));
  return TropicalPolynomial(std::move(exps), std::move(coefs));
}

}  // namespace trop
