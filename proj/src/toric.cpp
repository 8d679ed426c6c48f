#include "binoid/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "binoid/errors.hpp"
#include "binoid/lattice.hpp"
#include "binoid/linear.hpp"

namespace binoid {
namespace {

using IVec = std::vector<BigInt>;

IVec primitive(IVec v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x < 0 ? BigInt(-x) : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

struct HalfSpace {
  IVec normal;  // integer
  Rat offset;   // normal . x >= offset
};

using Cell = std::vector<HalfSpace>;

Rat dot(const IVec& a, const QVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

Rat doti(const IVec& a, const std::vector<BigInt>& x) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return Rat(s);
}

std::vector<LinIneq> to_ineqs(const Cell& cell, bool strict) {
  std::vector<LinIneq> cons;
  cons.reserve(cell.size());
  for (const auto& h : cell) {
    LinIneq c;
    c.a.reserve(h.normal.size());
    for (const auto& x : h.normal) c.a.push_back(Rat(x));
    c.b = h.offset;
    c.strict = strict;
    cons.push_back(std::move(c));
  }
  return cons;
}

bool cell_nonempty(const Cell& cell, std::size_t dim) {
  FMResult r = fm_solve(to_ineqs(cell, false), dim);
  return r.status != FMStatus::Infeasible;
}

bool cell_full_dimensional(const Cell& cell, std::size_t dim) {
  FMResult r = fm_solve(to_ineqs(cell, true), dim);
  return r.status == FMStatus::Feasible;
}

bool cell_unbounded(const Cell& cell, std::size_t dim) {
  // Recession cone: normal . x >= 0. Nonzero iff feasible with some
  // coordinate pushed to +-1.
  std::vector<LinIneq> base;
  for (const auto& h : cell) {
    LinIneq c;
    for (const auto& x : h.normal) c.a.push_back(Rat(x));
    c.b = 0;
    base.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < dim; ++j) {
    for (int sign : {1, -1}) {
      std::vector<LinIneq> cons = base;
      LinIneq c;
      c.a.assign(dim, Rat(0));
      c.a[j] = sign;
      c.b = 1;
      cons.push_back(std::move(c));
      FMResult r = fm_solve(cons, dim);
      if (r.status == FMStatus::Feasible) return true;
      if (r.status == FMStatus::CapExceeded)
        throw std::runtime_error("feasibility solver cap exceeded");
    }
  }
  return false;
}

std::vector<QVec> cell_vertices(const Cell& cell, std::size_t dim) {
  std::vector<QVec> verts;
  const std::size_t m = cell.size();
  std::vector<std::size_t> idx(dim);
  auto try_subset = [&](const std::vector<std::size_t>& subset) {
    QMat a;
    QVec b;
    for (auto i : subset) {
      QVec row;
      for (const auto& x : cell[i].normal) row.push_back(Rat(x));
      a.push_back(std::move(row));
      b.push_back(cell[i].offset);
    }
    // Unique solution only when the chosen normals are independent.
    QMat a2 = a;
    IMat ai(dim, std::vector<BigInt>(dim));
    bool integral = true;
    for (std::size_t i = 0; i < dim && integral; ++i)
      for (std::size_t j = 0; j < dim; ++j) ai[i][j] = cell[subset[i]].normal[j];
    if (determinant(ai) == 0) return;
    auto sol = solve_linear(std::move(a2), b);
    if (!sol) return;
    for (const auto& h : cell)
      if (dot(h.normal, *sol) < h.offset) return;
    if (std::find(verts.begin(), verts.end(), *sol) == verts.end()) verts.push_back(*sol);
  };
  // Enumerate dim-subsets of constraints.
  std::vector<std::size_t> comb(dim);
  auto rec = [&](auto&& self, std::size_t start, std::size_t k) -> void {
    if (k == dim) {
      try_subset(comb);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      comb[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  (void)idx;
  if (dim > 0 && m >= dim) rec(rec, 0, 0);
  return verts;
}

Rat det2(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Rat det3(const QVec& a, const QVec& b, const QVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

QVec vsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Sorts coplanar points of a convex polygon around their centroid, using the
// two given in-plane axes for exact angular comparison.
void sort_polygon(std::vector<QVec>& pts, std::size_t ax, std::size_t ay) {
  QVec centroid(pts[0].size(), Rat(0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < p.size(); ++i) centroid[i] += p[i];
  for (auto& x : centroid) x /= Rat(static_cast<int>(pts.size()));
  auto half = [&](const QVec& p) {
    Rat dy = p[ay] - centroid[ay];
    Rat dx = p[ax] - centroid[ax];
    return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
  };
  std::sort(pts.begin(), pts.end(), [&](const QVec& p, const QVec& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    Rat cross = (p[ax] - centroid[ax]) * (q[ay] - centroid[ay]) -
                (p[ay] - centroid[ay]) * (q[ax] - centroid[ax]);
    return cross > 0;
  });
}

Rat polytope_volume(const Cell& cell, std::vector<QVec> verts, std::size_t dim) {
  if (verts.empty()) return 0;
  if (dim == 1) {
    Rat lo = verts[0][0], hi = verts[0][0];
    for (const auto& v : verts) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return hi - lo;
  }
  if (dim == 2) {
    sort_polygon(verts, 0, 1);
    Rat area = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const QVec& p = verts[i];
      const QVec& q = verts[(i + 1) % verts.size()];
      area += det2(p, q);
    }
    if (area < 0) area = -area;
    return area / 2;
  }
  // dim == 3: sum pyramid volumes over facet polygons from a base vertex.
  Cell planes;
  for (const auto& h : cell) {
    bool dup = false;
    for (const auto& k : planes)
      if (k.normal == h.normal && k.offset == h.offset) dup = true;
    if (!dup) planes.push_back(h);
  }
  const QVec& o = verts[0];
  Rat vol = 0;
  for (const auto& h : planes) {
    std::vector<QVec> face;
    for (const auto& v : verts)
      if (dot(h.normal, v) == h.offset) face.push_back(v);
    if (face.size() < 3) continue;
    if (dot(h.normal, o) == h.offset) continue;  // pyramid over o's own facet is flat
    // Project out the dominant axis of the normal for the angular sort.
    std::size_t drop = 0;
    BigInt best = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      BigInt m = h.normal[j] < 0 ? BigInt(-h.normal[j]) : h.normal[j];
      if (m > best) {
        best = m;
        drop = j;
      }
    }
    std::size_t ax = drop == 0 ? 1 : 0;
    std::size_t ay = drop == 2 ? 1 : 2;
    sort_polygon(face, ax, ay);
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      Rat d = det3(vsub(face[0], o), vsub(face[i], o), vsub(face[i + 1], o));
      if (d < 0) d = -d;
      vol += d;
    }
  }
  return vol / 6;
}

// Facet normals of the full-dimensional pointed cone spanned by gens.
std::vector<IVec> cone_facets(const std::vector<IVec>& gens, std::size_t dim) {
  std::vector<IVec> facets;
  auto consider = [&](IVec n) {
    if (std::all_of(n.begin(), n.end(), [](const BigInt& x) { return x == 0; })) return;
    bool all_nonneg = true, all_nonpos = true, touches = false;
    for (const auto& g : gens) {
      Rat d = doti(n, g);
      if (d < 0) all_nonneg = false;
      if (d > 0) all_nonpos = false;
      if (d == 0) touches = true;
    }
    if (!touches && dim > 1) return;
    IVec cand;
    if (all_nonneg)
      cand = primitive(n);
    else if (all_nonpos) {
      for (auto& x : n) x = -x;
      cand = primitive(std::move(n));
    } else {
      return;
    }
    if (std::find(facets.begin(), facets.end(), cand) == facets.end())
      facets.push_back(std::move(cand));
  };
  if (dim == 1) {
    consider({BigInt(1)});
    consider({BigInt(-1)});
  } else if (dim == 2) {
    for (const auto& g : gens) consider({-g[1], g[0]});
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const IVec& u = gens[i];
        const IVec& v = gens[j];
        consider({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                  u[0] * v[1] - u[1] * v[0]});
      }
  }
  return facets;
}

}  // namespace

Rat toric_ehk(const std::vector<std::vector<std::int64_t>>& monoid_gens,
              const std::vector<std::vector<std::int64_t>>& ideal_gens, ToricOptions opts) {
  // An ideal generator equal to 0 makes the ideal improper: nothing survives.
  for (const auto& f : ideal_gens)
    if (std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x == 0; })) return 0;

  std::vector<IVec> gens;
  for (const auto& g : monoid_gens) {
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) continue;
    IVec v(g.begin(), g.end());
    if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(std::move(v));
  }
  if (gens.empty()) {
    // F = {0}: a point; any (necessarily improper) ideal was handled above.
    if (!ideal_gens.empty()) throw std::invalid_argument("nonzero ideal in the trivial monoid");
    return 1;
  }
  const std::size_t d0 = gens[0].size();

  // Re-express everything in coordinates of the lattice generated by the
  // monoid generators; volumes are then plain Euclidean volumes.
  IMat gmat(gens.size(), std::vector<BigInt>(d0));
  for (std::size_t i = 0; i < gens.size(); ++i) gmat[i] = gens[i];
  SNFResult snf = smith_normal_form(gmat);
  const std::size_t rho = [&] {
    std::size_t r = 0;
    for (const auto& dj : snf.diagonal())
      if (dj != 0) ++r;
    return r;
  }();
  if (rho > opts.exact_dimension_cap) throw DimensionCapExceeded(rho, opts.exact_dimension_cap);

  // Lattice basis rows: b_i = d_i * (row i of V^{-1}).
  IMat vinv(snf.v.size(), std::vector<BigInt>(snf.v.size(), 0));
  {
    QMat a(snf.v.size(), QVec(snf.v.size()));
    for (std::size_t i = 0; i < snf.v.size(); ++i)
      for (std::size_t j = 0; j < snf.v.size(); ++j) a[i][j] = Rat(snf.v[i][j]);
    for (std::size_t col = 0; col < snf.v.size(); ++col) {
      QVec e(snf.v.size(), Rat(0));
      e[col] = 1;
      auto x = solve_linear(a, e);
      if (!x) throw std::runtime_error("singular transform");
      for (std::size_t i = 0; i < snf.v.size(); ++i) {
        if (denominator((*x)[i]) != 1) throw std::runtime_error("non-integral inverse");
        vinv[i][col] = numerator((*x)[i]);
      }
    }
  }
  QMat basis(rho, QVec(d0));
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < d0; ++j) basis[i][j] = Rat(snf.diagonal()[i] * vinv[i][j]);

  auto coords = [&](const IVec& g) {
    // Solve x * basis = g for x in Z^rho.
    QMat a(d0, QVec(rho));
    for (std::size_t i = 0; i < d0; ++i)
      for (std::size_t j = 0; j < rho; ++j) a[i][j] = basis[j][i];
    QVec b(d0);
    for (std::size_t i = 0; i < d0; ++i) b[i] = Rat(g[i]);
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x) throw std::invalid_argument("vector outside the generated lattice");
    IVec out(rho);
    for (std::size_t j = 0; j < rho; ++j) {
      if (denominator((*x)[j]) != 1)
        throw std::invalid_argument("vector outside the generated lattice");
      out[j] = numerator((*x)[j]);
    }
    return out;
  };

  std::vector<IVec> cgens;
  for (const auto& g : gens) cgens.push_back(coords(g));
  std::vector<IVec> cideal;
  for (const auto& f : ideal_gens) {
    IVec v(f.begin(), f.end());
    cideal.push_back(coords(v));
  }

  if (rho == 0) return ideal_gens.empty() ? Rat(1) : Rat(0);

  // Pointedness: a strictly positive functional on all generators.
  {
    std::vector<LinIneq> cons;
    for (const auto& g : cgens) {
      LinIneq c;
      for (const auto& x : g) c.a.push_back(Rat(x));
      c.b = 1;
      cons.push_back(std::move(c));
    }
    FMResult r = fm_solve(cons, rho);
    if (r.status != FMStatus::Feasible)
      throw UnmetHypothesis("cone is not pointed (monoid not positive)");
  }

  std::vector<IVec> facets = cone_facets(cgens, rho);
  if (facets.empty()) throw std::runtime_error("cone facet computation failed");

  auto in_cone = [&](const IVec& x) {
    for (const auto& h : facets)
      if (doti(h, x) < 0) return false;
    return true;
  };
  // Drop ideal generators dominated by another (f in g + C).
  std::vector<IVec> active;
  for (std::size_t i = 0; i < cideal.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cideal.size() && !dominated; ++j) {
      if (i == j) continue;
      IVec diff(rho);
      for (std::size_t k = 0; k < rho; ++k) diff[k] = cideal[i][k] - cideal[j][k];
      if (in_cone(diff) && (cideal[i] != cideal[j] || j < i)) dominated = true;
    }
    if (!dominated) active.push_back(cideal[i]);
  }

  // Carve the cone by each shifted cone, keeping closed cells whose interiors
  // are disjoint and whose union is the complement region.
  std::vector<Cell> cells;
  {
    Cell c0;
    for (const auto& h : facets) c0.push_back({h, Rat(0)});
    cells.push_back(std::move(c0));
  }
  for (const auto& f : active) {
    std::vector<Cell> next;
    for (const auto& cell : cells) {
      for (std::size_t k = 0; k < facets.size(); ++k) {
        Cell piece = cell;
        for (std::size_t j = 0; j < k; ++j)
          piece.push_back({facets[j], doti(facets[j], f)});
        IVec neg(rho);
        for (std::size_t t = 0; t < rho; ++t) neg[t] = -facets[k][t];
        piece.push_back({std::move(neg), -doti(facets[k], f)});
        if (cell_nonempty(piece, rho)) next.push_back(std::move(piece));
        if (next.size() > opts.cell_cap)
          throw std::runtime_error("cell decomposition exceeded cap");
      }
    }
    cells = std::move(next);
  }

  Rat total = 0;
  for (const auto& cell : cells) {
    if (!cell_full_dimensional(cell, rho)) continue;
    if (cell_unbounded(cell, rho)) throw UnboundedRegion();
    auto verts = cell_vertices(cell, rho);
    total += polytope_volume(cell, std::move(verts), rho);
  }
  return total;
}

}  // namespace binoid
