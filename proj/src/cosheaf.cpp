#include "trop/cosheaf.hpp"

#include "trop/lattice.hpp"

namespace trop {

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

}  // namespace

FramedComplex::FramedComplex(const TropicalComplex& x, int p) : x_(&x), p_(p) {
  if (p < 0) throw input_error("framing: negative wedge power");
  framing_.reserve(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    const Cell& t = x.cell(i);
    int wd = binom(x.chart_dim(t.sed), p);
    std::vector<IntMat> gen;
    int total = 0;
    for (int s : x.closed_star(i)) {
      const Cell& c = x.cell(s);
      IntMat moved = x.transition(c.sed, t.sed) * c.tangent;
      IntMat w = wedge_basis(moved, p);
      if (w.cols() > 0) {
        gen.push_back(w);
        total += static_cast<int>(w.cols());
      }
    }
    IntMat all(wd, total);
    int at = 0;
    for (const IntMat& g : gen) {
      all.middleCols(at, g.cols()) = g;
      at += static_cast<int>(g.cols());
    }
    framing_.push_back(hermite_basis(all));
  }
}

IntMat FramedComplex::face_map(int from, int to) const {
  auto key = std::make_pair(from, to);
  auto it = map_cache_.find(key);
  if (it != map_cache_.end()) return it->second;

  const TropicalComplex& x = *x_;
  if (!x.is_face(to, from)) throw input_error("face_map: target is not a face");
  const Cell& s = x.cell(from);
  const Cell& t = x.cell(to);
  IntMat q = compound(IntMat(x.transition(s.sed, t.sed)), p_);
  IntMat img = q * framing_[static_cast<size_t>(from)];
  const IntMat& b = framing_[static_cast<size_t>(to)];
  IntMat out(b.cols(), img.cols());
  for (int j = 0; j < img.cols(); ++j) {
    auto sol = solve_int(b, IntVec(img.col(j)));
    if (!sol) throw validation_error("face_map: framing image escapes the face framing");
    out.col(j) = *sol;
  }
  map_cache_.emplace(key, out);
  return out;
}

}  // namespace trop
