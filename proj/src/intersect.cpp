#include "trop/intersect.hpp"

#include <map>
#include <utility>

#include "trop/lattice.hpp"

namespace trop {

namespace {

std::vector<Rat> key_of(const RatVec& p) {
  std::vector<Rat> k(static_cast<size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) k[static_cast<size_t>(i)] = p(i);
  return k;
}

RatVec rat_dir(const ChainPiece& c) {
  return c.bounded ? RatVec(c.b - c.a) : to_rat(c.dir);
}

RatVec piece_mid(const ChainPiece& c) {
  return c.bounded ? RatVec((c.a + c.b) / Rat(2)) : RatVec(c.a + to_rat(c.dir));
}

void validate_piece(const ChainPiece& c, const FramedComplex& f1) {
  const TropicalComplex& x = f1.space();
  if (c.host < 0 || c.host >= x.size()) throw input_error("chain piece host out of range");
  const Cell& h = x.cell(c.host);
  if (c.weight == 0) throw input_error("chain piece with zero weight");
  if (is_zero(c.framing)) throw input_error("chain piece with zero framing");
  if (c.framing.size() != h.vertices.rows())
    throw input_error("chain framing has the wrong chart dimension");
  if (c.bounded) {
    RatVec d = c.b - c.a;
    if (is_zero(d)) throw input_error("degenerate chain piece");
  } else if (is_zero(c.dir)) {
    throw input_error("unbounded chain piece without direction");
  }
  if (x.locate(h.sed, piece_mid(c)) != c.host)
    throw input_error("chain piece interior escapes its host cell");
  if (!solve_int(f1.framing(c.host), c.framing))
    throw input_error("chain framing outside the framing group of its host");
}

// residues of the chain boundary, grouped by (cell, exact point)
std::map<std::pair<int, std::vector<Rat>>, IntVec> boundary_residues(
    const FramedChain& c, const FramedComplex& f1) {
  const TropicalComplex& x = f1.space();
  std::map<std::pair<int, std::vector<Rat>>, IntVec> res;
  auto add = [&](int cell, const RatVec& pt, const IntVec& fr, const Int& w) {
    auto key = std::make_pair(cell, key_of(pt));
    auto it = res.find(key);
    if (it == res.end()) {
      IntVec z = IntVec::Zero(fr.size());
      it = res.emplace(key, z).first;
    }
    it->second += w * fr;
  };
  for (const ChainPiece& pc : c.pieces) {
    validate_piece(pc, f1);
    const Cell& h = x.cell(pc.host);
    int ta = x.locate(h.sed, pc.a);
    if (ta < 0 || !x.is_face(ta, pc.host))
      throw input_error("chain piece endpoint leaves the host closure");
    add(ta, pc.a, pc.framing, -pc.weight);
    if (pc.bounded) {
      int tb = x.locate(h.sed, pc.b);
      if (tb < 0 || !x.is_face(tb, pc.host))
        throw input_error("chain piece endpoint leaves the host closure");
      add(tb, pc.b, pc.framing, pc.weight);
    } else {
      if (pc.limit < 0 || pc.limit >= x.size())
        throw input_error("unbounded chain piece without a limit cell");
      const Cell& lim = x.cell(pc.limit);
      if (lim.sed.size() <= h.sed.size() || !x.is_face(pc.limit, pc.host))
        throw input_error("limit cell is not a boundary face of the host");
      IntMat t = x.transition(h.sed, lim.sed);
      IntVec dimg = t * pc.dir;
      if (!is_zero(dimg))
        throw input_error("ray direction does not recede to the limit stratum");
      IntVec fimg = t * pc.framing;
      if (is_zero(fimg)) continue;  // framing dies in the stratum quotient
      RatVec pl = to_rat(t) * pc.a;
      int tl = x.locate(lim.sed, pl);
      if (tl < 0 || !x.is_face(tl, pc.host))
        throw input_error("limit point leaves the host closure");
      add(tl, pl, fimg, pc.weight);
    }
  }
  return res;
}

bool dependent(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = i + 1; j < a.size(); ++j)
      if (a(i) * b(j) - a(j) * b(i) != 0) return false;
  return true;
}

// signature of a fully known symmetric rational matrix by congruence
void diagonal_signature(RatMat m, Signature& s) {
  Eigen::Index k = m.rows();
  std::vector<bool> done(static_cast<size_t>(k), false);
  Eigen::Index left = k;
  while (left > 0) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < k; ++i)
      if (!done[static_cast<size_t>(i)] && m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      Rat d = m(piv, piv);
      if (d > 0)
        ++s.pos;
      else
        ++s.neg;
      done[static_cast<size_t>(piv)] = true;
      --left;
      for (Eigen::Index l = 0; l < k; ++l) {
        if (done[static_cast<size_t>(l)]) continue;
        for (Eigen::Index j = 0; j < k; ++j) {
          if (done[static_cast<size_t>(j)]) continue;
          m(l, j) -= m(l, piv) * m(piv, j) / d;
        }
      }
      continue;
    }
    // all remaining diagonal entries vanish: hyperbolic pair or radical
    Eigen::Index i = -1, j = -1;
    for (Eigen::Index a = 0; a < k && i < 0; ++a) {
      if (done[static_cast<size_t>(a)]) continue;
      for (Eigen::Index b = a + 1; b < k; ++b) {
        if (done[static_cast<size_t>(b)]) continue;
        if (m(a, b) != 0) {
          i = a;
          j = b;
          break;
        }
      }
    }
    if (i < 0) {
      s.null += static_cast<int>(left);
      return;
    }
    Rat q = m(i, j);
    ++s.pos;
    ++s.neg;
    done[static_cast<size_t>(i)] = done[static_cast<size_t>(j)] = true;
    left -= 2;
    for (Eigen::Index l = 0; l < k; ++l) {
      if (done[static_cast<size_t>(l)]) continue;
      for (Eigen::Index mcol = 0; mcol < k; ++mcol) {
        if (done[static_cast<size_t>(mcol)]) continue;
        m(l, mcol) -= (m(l, i) * m(mcol, j) + m(l, j) * m(mcol, i)) / q;
      }
    }
  }
}

}  // namespace

FramedChain reversed(FramedChain c) {
  for (ChainPiece& p : c.pieces) p.weight = -p.weight;
  return c;
}

bool check_balanced(const Weighted1Cycle& c) {
  std::map<std::vector<Rat>, IntVec> res;
  auto add = [&](const RatVec& pt, const IntVec& u, const Int& w) {
    auto it = res.find(key_of(pt));
    if (it == res.end()) {
      IntVec z = IntVec::Zero(u.size());
      it = res.emplace(key_of(pt), z).first;
    }
    it->second += w * u;
  };
  for (const WeightedEdge& e : c.edges) {
    if (e.weight == 0) throw input_error("weighted edge with zero weight");
    RatVec d = e.bounded ? RatVec(e.b - e.a) : to_rat(e.dir);
    if (is_zero(d)) throw input_error("degenerate weighted edge");
    IntVec u = primitive(d);
    add(e.a, u, -e.weight);
    if (e.bounded) add(e.b, u, e.weight);
  }
  for (const auto& [pt, sum] : res)
    if (!is_zero(sum)) return false;
  return true;
}

int ray_limit(const TropicalComplex& x, int host, const IntVec& dir) {
  const Ambient& amb = x.ambient();
  // minimal fan cone swallowing the direction
  std::vector<int> sed;
  bool found = false;
  for (size_t sz = 1; sz <= amb.rays.size() && !found; ++sz) {
    for (const auto& cone : amb.cones) {
      if (cone.size() != sz) continue;
      RatMat r(amb.n, static_cast<Eigen::Index>(cone.size()));
      for (size_t i = 0; i < cone.size(); ++i)
        r.col(static_cast<Eigen::Index>(i)) =
            to_rat(amb.rays[static_cast<size_t>(cone[i])]);
      auto sol = solve_rat(r, to_rat(dir));
      if (!sol) continue;
      bool strict = true;
      for (Eigen::Index i = 0; i < sol->size(); ++i)
        if ((*sol)(i) <= 0) strict = false;
      if (strict) {
        sed = cone;
        found = true;
        break;
      }
    }
  }
  if (!found) throw input_error("ray direction escapes the ambient fan");
  int limit = x.index_of(sed, x.cell(host).dual);
  if (limit < 0) throw input_error("no boundary cell receives the ray");
  return limit;
}

FramedChain cyc(const Weighted1Cycle& c, const TropicalComplex& x) {
  if (!check_balanced(c)) throw validation_error("one-cycle is not balanced");
  FramedChain out;
  for (const WeightedEdge& e : c.edges) {
    ChainPiece p;
    p.a = e.a;
    p.b = e.b;
    p.bounded = e.bounded;
    p.weight = e.weight;
    RatVec d = e.bounded ? RatVec(e.b - e.a) : to_rat(e.dir);
    p.framing = primitive(d);
    if (!e.bounded) p.dir = p.framing;
    RatVec mid = e.bounded ? RatVec((e.a + e.b) / Rat(2)) : RatVec(e.a + d);
    p.host = x.locate({}, mid);
    if (p.host < 0) throw input_error("one-cycle support leaves the variety");
    if (!e.bounded) p.limit = ray_limit(x, p.host, p.dir);
    out.pieces.push_back(std::move(p));
  }
  return out;
}

bool is_cycle(const FramedChain& c, const FramedComplex& f1) {
  if (c.p != 1 || c.q != 1) throw input_error("only (1,1)-chains are supported");
  auto res = boundary_residues(c, f1);
  for (const auto& [key, sum] : res)
    if (!is_zero(sum)) return false;
  return true;
}

bool is_cycle(const FramedChain& c, const TropicalComplex& x) {
  FramedComplex f1(x, 1);
  return is_cycle(c, f1);
}

Int transversal_intersection(const FramedChain& a, const FramedChain& b,
                             const TropicalComplex& x, std::vector<Int>* local) {
  Int total = 0;
  for (const ChainPiece& p : a.pieces) {
    const Cell& hp = x.cell(p.host);
    for (const ChainPiece& q : b.pieces) {
      const Cell& hq = x.cell(q.host);
      if (hp.sed != hq.sed) continue;  // disjoint strata
      RatVec dp = rat_dir(p), dq = rat_dir(q);
      if (is_zero(dp) || is_zero(dq)) throw input_error("degenerate chain piece");
      Eigen::Index n = dp.size();
      RatMat m(n, 2);
      m.col(0) = dp;
      m.col(1) = -dq;
      RatVec rhs = q.a - p.a;
      int rk = rank_rat(m);
      if (rk == 1) {
        RatMat ext(n, 3);
        ext << m, rhs;
        if (rank_rat(ext) > 1) continue;  // parallel, never meet
        // collinear: compare parameter intervals along dp
        Eigen::Index ix = 0;
        while (dp(ix) == 0) ++ix;
        Rat t0 = rhs(ix) / dp(ix);
        Rat lam = dq(ix) / dp(ix);
        // q occupies [t0, t0 + lam] (or a ray), p occupies [0, 1] (or [0, inf))
        Rat qlo = t0, qhi = t0;
        bool qlo_inf = false, qhi_inf = false;
        if (q.bounded) {
          if (lam >= 0)
            qhi = t0 + lam;
          else
            qlo = t0 + lam;
        } else {
          (lam > 0 ? qhi_inf : qlo_inf) = true;
        }
        Rat lo = qlo, hi = qhi;
        bool lo_inf = qlo_inf, hi_inf = qhi_inf;
        if (lo_inf || lo < 0) {
          lo = 0;
          lo_inf = false;
        }
        if (p.bounded && (hi_inf || hi > 1)) {
          hi = 1;
          hi_inf = false;
        }
        if (!hi_inf && !lo_inf && lo > hi) continue;
        if (!hi_inf && lo == hi) {
          // isolated endpoint touch: with dependent framings every transversal
          // perturbation pairs to zero, so the touch contributes nothing
          if (dependent(p.framing, q.framing)) continue;
          throw validation_error("chain supports touch at piece endpoints");
        }
        throw validation_error("chain supports overlap along a segment");
      }
      auto sol = solve_rat(m, rhs);
      if (!sol) continue;  // skew
      Rat t = (*sol)(0), s = (*sol)(1);
      if (t < 0 || (p.bounded && t > 1)) continue;
      if (s < 0 || (q.bounded && s > 1)) continue;
      bool interior = t > 0 && s > 0 && (!p.bounded || t < 1) && (!q.bounded || s < 1);
      if (!interior) {
        if (dependent(p.framing, q.framing)) continue;
        throw validation_error("chain supports meet at a piece endpoint");
      }
      if (p.host != q.host || hp.dim != 2 || !hp.sed.empty()) {
        if (dependent(p.framing, q.framing)) continue;
        throw validation_error("chains meet outside the interior of a common facet");
      }
      auto up = solve_int(hp.tangent, primitive(dp));
      auto uq = solve_int(hp.tangent, primitive(dq));
      auto fp = solve_int(hp.tangent, p.framing);
      auto fq = solve_int(hp.tangent, q.framing);
      if (!up || !uq || !fp || !fq)
        throw validation_error("directions or framings not tangent to the facet");
      Int dd = (*up)(0) * (*uq)(1) - (*up)(1) * (*uq)(0);
      Int df = (*fp)(0) * (*fq)(1) - (*fp)(1) * (*fq)(0);
      Int sign = dd > 0 ? 1 : -1;
      Int mult = p.weight * q.weight * sign * df;
      if (mult != 0 && local) local->push_back(mult);
      total += mult;
    }
  }
  return total;
}

void check_hypersurface_balancing(const TropicalComplex& x) {
  int dim = x.dim();
  for (int tau : x.cells_of_dim(dim - 1)) {
    const Cell& ct = x.cell(tau);
    if (!ct.sed.empty()) continue;
    Eigen::Index n = ct.vertices.rows();
    Eigen::Index k = ct.tangent.cols();
    IntMat proj;
    if (k == 0) {
      proj = IntMat::Identity(n, n);
    } else {
      SNFResult snf = smith_normal_form(ct.tangent);
      for (const Int& d : snf.diagonal)
        if (d != 1 && d != -1)
          throw validation_error("tangent lattice of cell " + std::to_string(tau) +
                                 " is not saturated");
      proj = snf.U.bottomRows(n - k);
    }
    IntVec sum = IntVec::Zero(n - k);
    RatVec base = x.relint_point(tau);
    int star = 0;
    for (int sigma : x.cells_of_dim(dim)) {
      const Cell& cs = x.cell(sigma);
      if (!cs.sed.empty() || !x.is_face(tau, sigma)) continue;
      RatVec w = to_rat(proj) * (x.relint_point(sigma) - base);
      if (is_zero(w))
        throw validation_error("degenerate star around cell " + std::to_string(tau));
      sum += primitive(w);
      ++star;
    }
    if (star == 0) continue;
    if (!is_zero(sum))
      throw validation_error("hypersurface unbalanced around cell " + std::to_string(tau));
  }
}

Signature form_signature(const IntersectionForm& q) {
  size_t k = q.labels.size();
  if (q.block.size() != k || q.entries.size() != k)
    throw input_error("malformed intersection form");
  bool complete = true;
  for (size_t i = 0; i < k; ++i) {
    if (q.entries[i].size() != k) throw input_error("malformed intersection form");
    for (size_t j = 0; j < k; ++j) {
      if (q.entries[i][j].has_value() != q.entries[j][i].has_value())
        throw input_error("asymmetric knowledge pattern in the form");
      if (q.entries[i][j] && *q.entries[i][j] != *q.entries[j][i])
        throw input_error("intersection form is not symmetric");
      if (!q.entries[i][j]) complete = false;
    }
  }
  Signature s;
  s.assumptions = q.assumptions;
  if (complete) {
    RatMat m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            Rat(*q.entries[i][j]);
    diagonal_signature(m, s);
    return s;
  }
  // Partially known: the unknown entries must all sit in rows reachable from
  // the hyperbolic loop pairs or on the vertical square, so that splitting
  // off one hyperbolic plane per curve loop leaves the floor block.
  std::vector<size_t> ia, ic, ib, iv;
  for (size_t i = 0; i < k; ++i) {
    switch (q.block[i]) {
      case 'A': ia.push_back(i); break;
      case 'C': ic.push_back(i); break;
      case 'B': ib.push_back(i); break;
      case 'V': iv.push_back(i); break;
      default: throw input_error("unknown block tag in a partially known form");
    }
  }
  if (ic.size() != ib.size() || iv.size() > 1)
    throw input_error("unexpected block layout in a partially known form");
  auto known_is = [&](size_t i, size_t j, const Int& v) {
    return q.entries[i][j] && *q.entries[i][j] == v;
  };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (q.entries[i][j]) continue;
      bool star = (q.block[i] == 'B' || q.block[i] == 'V') &&
                  (q.block[j] == 'B' || q.block[j] == 'V');
      star |= (q.block[i] == 'B' && q.block[j] == 'A') ||
              (q.block[i] == 'A' && q.block[j] == 'B');
      if (!star)
        throw validation_error("unknown entry outside the reducible pattern");
    }
  for (size_t ci = 0; ci < ic.size(); ++ci) {
    for (size_t j = 0; j < k; ++j) {
      if (q.block[j] == 'B') continue;
      if (!known_is(ic[ci], j, 0))
        throw validation_error("curve loop row is not isotropic and orthogonal");
    }
    for (size_t bj = 0; bj < ib.size(); ++bj)
      if (!known_is(ic[ci], ib[bj], bj == ci ? 1 : 0))
        throw validation_error("loop pairing with its dual cycle is not the identity");
  }
  for (size_t v : iv)
    for (size_t j : ia)
      if (!known_is(v, j, 0))
        throw validation_error("vertical cycle not orthogonal to the floor block");
  RatMat m(static_cast<Eigen::Index>(ia.size()), static_cast<Eigen::Index>(ia.size()));
  for (size_t i = 0; i < ia.size(); ++i)
    for (size_t j = 0; j < ia.size(); ++j) {
      if (!q.entries[ia[i]][ia[j]])
        throw validation_error("floor block entry unknown");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Rat(*q.entries[ia[i]][ia[j]]);
    }
  diagonal_signature(m, s);
  s.pos += static_cast<int>(ic.size());
  s.neg += static_cast<int>(ic.size());
  s.pos += static_cast<int>(iv.size());
  return s;
}

}  // namespace trop
