#include "trop/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace trop {

namespace {

// boundary-of-boundary must vanish block by block
void verify_square_zero(const ChainComplex& cc) {
  for (size_t q = 2; q < cc.boundary.size(); ++q) {
    const SparseMat& d = cc.boundary[q];
    const SparseMat& e = cc.boundary[q - 1];
    for (int j = 0; j < d.cols; ++j) {
      std::map<int, Int> acc;
      for (const auto& [r, v] : d.col[static_cast<size_t>(j)])
        for (const auto& [r2, v2] : e.col[static_cast<size_t>(r)]) acc[r2] += v * v2;
      for (const auto& [r2, v2] : acc)
        if (v2 != 0) throw validation_error("chain_complex: boundary squared non-zero");
    }
  }
}

}  // namespace

ChainComplex chain_complex(const FramedComplex& f) {
  std::vector<int> all(static_cast<size_t>(f.space().size()));
  std::iota(all.begin(), all.end(), 0);
  return chain_complex(f, all);
}

ChainComplex chain_complex(const FramedComplex& f, const std::vector<int>& keep) {
  const TropicalComplex& x = f.space();
  std::vector<char> in(static_cast<size_t>(x.size()), 0);
  for (int c : keep) {
    if (c < 0 || c >= x.size()) throw input_error("chain_complex: bad cell id");
    in[static_cast<size_t>(c)] = 1;
  }
  for (int c : keep)
    for (int t : x.cell(c).facets)
      if (!in[static_cast<size_t>(t)])
        throw input_error("chain_complex: selection is not closed under faces");

  int top = x.dim();
  ChainComplex cc;
  cc.cells.assign(static_cast<size_t>(top) + 1, {});
  cc.offsets.assign(static_cast<size_t>(top) + 1, {});
  cc.dims.assign(static_cast<size_t>(top) + 1, 0);
  std::vector<int> offset_of(static_cast<size_t>(x.size()), -1);
  for (int q = 0; q <= top; ++q)
    for (int c : x.cells_of_dim(q)) {
      if (!in[static_cast<size_t>(c)]) continue;
      cc.cells[static_cast<size_t>(q)].push_back(c);
      cc.offsets[static_cast<size_t>(q)].push_back(cc.dims[static_cast<size_t>(q)]);
      offset_of[static_cast<size_t>(c)] = cc.dims[static_cast<size_t>(q)];
      cc.dims[static_cast<size_t>(q)] += f.rank(c);
    }

  cc.boundary.resize(static_cast<size_t>(top) + 1);
  cc.boundary[0].rows = 0;
  cc.boundary[0].cols = cc.dims[0];
  cc.boundary[0].col.assign(static_cast<size_t>(cc.dims[0]), {});
  for (int q = 1; q <= top; ++q) {
    SparseMat& d = cc.boundary[static_cast<size_t>(q)];
    d.rows = cc.dims[static_cast<size_t>(q) - 1];
    d.cols = cc.dims[static_cast<size_t>(q)];
    d.col.assign(static_cast<size_t>(d.cols), {});
    const auto& here = cc.cells[static_cast<size_t>(q)];
    for (size_t i = 0; i < here.size(); ++i) {
      int s = here[i];
      int off = cc.offsets[static_cast<size_t>(q)][i];
      const Cell& sc = x.cell(s);
      for (size_t k = 0; k < sc.facets.size(); ++k) {
        int t = sc.facets[k];
        if (!in[static_cast<size_t>(t)]) continue;
        Int sign(sc.facet_signs[k]);
        IntMat m = f.face_map(s, t);
        int ro = offset_of[static_cast<size_t>(t)];
        for (int cj = 0; cj < m.cols(); ++cj)
          for (int rj = 0; rj < m.rows(); ++rj)
            if (m(rj, cj) != 0)
              d.col[static_cast<size_t>(off + cj)].push_back({ro + rj, sign * m(rj, cj)});
      }
      for (int cj = 0; cj < f.rank(s); ++cj) {
        auto& col = d.col[static_cast<size_t>(off + cj)];
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
      }
    }
  }
  verify_square_zero(cc);
  return cc;
}

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
  size_t n = cc.dims.size();
  std::vector<DiagSNF> snf(n + 1);
  for (size_t q = 1; q < n; ++q) snf[q] = smith_diagonal(cc.boundary[q]);
  std::vector<HomologyGroup> out(n);
  for (size_t q = 0; q < n; ++q) {
    out[q].betti = cc.dims[q] - snf[q].rank - snf[q + 1].rank;
    for (const Int& d : snf[q + 1].diagonal) {
      Int a = d < 0 ? Int(-d) : d;
      if (a > 1) out[q].torsion.push_back(a);
    }
  }
  return out;
}

HodgeTable hodge_table(const TropicalComplex& x) {
  std::vector<int> all(static_cast<size_t>(x.size()));
  std::iota(all.begin(), all.end(), 0);
  return hodge_table(x, all);
}

HodgeTable hodge_table(const TropicalComplex& x, const std::vector<int>& keep) {
  HodgeTable t;
  for (int p = 0; p <= x.dim(); ++p) {
    FramedComplex f(x, p);
    t.groups.push_back(homology(chain_complex(f, keep)));
    for (const auto& g : t.groups.back())
      if (!g.torsion.empty()) t.has_torsion = true;
  }
  return t;
}

void check_cover_exactness(const FramedComplex& f, const std::vector<int>& a,
                           const std::vector<int>& b) {
  const TropicalComplex& x = f.space();
  std::vector<char> ina(static_cast<size_t>(x.size()), 0), inb = ina;
  for (int c : a) ina[static_cast<size_t>(c)] = 1;
  for (int c : b) inb[static_cast<size_t>(c)] = 1;
  std::vector<int> meet;
  for (int c = 0; c < x.size(); ++c) {
    if (!ina[static_cast<size_t>(c)] && !inb[static_cast<size_t>(c)])
      throw input_error("check_cover_exactness: the two parts do not cover");
    if (ina[static_cast<size_t>(c)] && inb[static_cast<size_t>(c)]) meet.push_back(c);
  }
  auto ha = homology(chain_complex(f, a));
  auto hb = homology(chain_complex(f, b));
  auto hw = homology(chain_complex(f, meet));
  auto hx = homology(chain_complex(f));
  long total = 0;
  for (size_t q = 0; q < hx.size(); ++q) {
    long term = hw[q].betti - ha[q].betti - hb[q].betti + hx[q].betti;
    total += (q % 2 == 0) ? term : -term;
  }
  if (total != 0) throw validation_error("check_cover_exactness: rank identity fails");
}

}  // namespace trop
