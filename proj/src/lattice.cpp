#include "binoid/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "binoid/errors.hpp"

namespace binoid {

IMat identity_matrix(std::size_t n) {
  IMat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat matrix_product(const IMat& a, const IMat& b) {
  const std::size_t r = a.size();
  const std::size_t k = b.size();
  const std::size_t c = k == 0 ? 0 : b[0].size();
  IMat out(r, std::vector<BigInt>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

BigInt determinant(IMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<BigInt> SNFResult::diagonal() const {
  std::vector<BigInt> out;
  const std::size_t n = std::min(d.size(), d.empty() ? 0 : d[0].size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
  return out;
}

SNFResult smith_normal_form(IMat a) {
  const std::size_t r = a.size();
  const std::size_t c = r == 0 ? 0 : a[0].size();
  SNFResult res;
  res.u = identity_matrix(r);
  res.v = identity_matrix(c);
  IMat& d = a;

  auto row_sub = [&](std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t j = 0; j < c; ++j) d[i][j] -= q * d[k][j];
    for (std::size_t j = 0; j < r; ++j) res.u[i][j] -= q * res.u[k][j];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const BigInt& q) {
    for (std::size_t i = 0; i < r; ++i) d[i][j] -= q * d[i][k];
    for (std::size_t i = 0; i < c; ++i) res.v[i][j] -= q * res.v[i][k];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(d[i], d[k]);
    std::swap(res.u[i], res.u[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < r; ++i) std::swap(d[i][j], d[i][k]);
    for (std::size_t i = 0; i < c; ++i) std::swap(res.v[i][j], res.v[i][k]);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < c; ++j) d[i][j] = -d[i][j];
    for (std::size_t j = 0; j < r; ++j) res.u[i][j] = -res.u[i][j];
  };

  std::size_t t = 0;
  while (t < r && t < c) {
    // Pivot: smallest nonzero magnitude in the trailing submatrix.
    std::size_t pi = t, pj = t;
    BigInt best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (d[i][j] == 0) continue;
        BigInt m = d[i][j] < 0 ? BigInt(-d[i][j]) : d[i][j];
        if (best == 0 || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d[i][t] == 0) continue;
        BigInt q = d[i][t] / d[t][t];
        if (q != 0) row_sub(i, t, q);
        if (d[i][t] != 0) {
          row_swap(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d[t][j] == 0) continue;
        BigInt q = d[t][j] / d[t][t];
        if (q != 0) col_sub(j, t, q);
        if (d[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide every trailing entry.
      for (std::size_t i = t + 1; i < r && clean; ++i)
        for (std::size_t j = t + 1; j < c && clean; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_sub(t, i, BigInt(-1));  // add row i to row t
            clean = false;
          }
    }
    if (d[t][t] < 0) row_negate(t);
    ++t;
  }
  res.rank = t;
  res.d = std::move(d);
  return res;
}

namespace {

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("lattice coordinate exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

// Inverse of a unimodular integer matrix via rational elimination.
IMat unimodular_inverse(const IMat& v) {
  const std::size_t n = v.size();
  IMat inv = identity_matrix(n);
  // Gauss-Jordan over rationals, then the result is integral.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(v[i][j]);
    a[i][n + i] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw std::runtime_error("matrix not invertible");
    std::swap(a[p], a[row]);
    Rat d = a[row][col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[row][j] /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = a[i][n + j];
      if (denominator(x) != 1) throw std::runtime_error("matrix inverse not integral");
      inv[i][j] = numerator(x);
    }
  return inv;
}

}  // namespace

std::uint64_t LatticeData::torsion_order() const {
  std::uint64_t t = 1;
  for (auto k : torsion_invariants) t *= static_cast<std::uint64_t>(k);
  return t;
}

std::optional<GeneratorImage> LatticeData::word_image(const Word& w) const {
  GeneratorImage img;
  img.free_part.assign(rank, 0);
  img.torsion_part.assign(torsion_invariants.size(), 0);
  for (std::size_t g = 0; g < w.size(); ++g) {
    if (w[g] == 0) continue;
    if (!embedding[g]) return std::nullopt;
    const auto& e = *embedding[g];
    for (std::size_t j = 0; j < rank; ++j) img.free_part[j] += w[g] * e.free_part[j];
    for (std::size_t j = 0; j < torsion_invariants.size(); ++j) {
      img.torsion_part[j] =
          (img.torsion_part[j] + w[g] % torsion_invariants[j] * e.torsion_part[j]) %
          torsion_invariants[j];
    }
  }
  return img;
}

LatticeData difference_group(const Presentation& p, CompletionOptions opts) {
  RewriteSystem sys = complete(p, opts);
  if (sys.collapsed()) throw UnmetHypothesis("zero binoid has no difference group");
  const std::size_t n = p.generator_count();

  std::vector<bool> killed(n, false);
  for (const auto& m : sys.monomial_lhs()) {
    // Killed generators are exactly the unit-vector monomials; other monomial
    // generators do not affect the group of the non-inf part.
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) {
        ++nz;
        idx = i;
      }
    if (nz == 1 && m[idx] == 1) killed[idx] = true;
  }

  LatticeData lat;
  for (const auto& rule : sys.binomial_rules()) {
    std::vector<BigInt> row(n, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = BigInt(rule.lhs[i]) - BigInt(rule.rhs[i]);
    lat.relation_matrix.push_back(std::move(row));
  }

  // Columns restricted to the surviving generators.
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < n; ++i)
    if (!killed[i]) survivors.push_back(i);
  const std::size_t ns = survivors.size();
  IMat rel(lat.relation_matrix.size(), std::vector<BigInt>(ns, 0));
  for (std::size_t r = 0; r < lat.relation_matrix.size(); ++r)
    for (std::size_t j = 0; j < ns; ++j) rel[r][j] = lat.relation_matrix[r][survivors[j]];

  SNFResult snf = smith_normal_form(rel.empty() ? IMat(1, std::vector<BigInt>(ns, 0)) : rel);
  // diff = Z^ns / rowspace(rel); x maps to x * V, coordinate j modulo d_j.
  std::vector<BigInt> diag = snf.diagonal();
  std::vector<std::size_t> torsion_cols, free_cols;
  for (std::size_t j = 0; j < ns; ++j) {
    BigInt dj = j < diag.size() ? diag[j] : BigInt(0);
    if (dj == 0)
      free_cols.push_back(j);
    else if (dj >= 2)
      torsion_cols.push_back(j);
  }
  lat.rank = free_cols.size();
  for (auto j : torsion_cols) lat.torsion_invariants.push_back(to_i64(diag[j]));

  lat.embedding.assign(n, std::nullopt);
  for (std::size_t s = 0; s < ns; ++s) {
    // Row s of V is the image of the survivor's basis vector.
    GeneratorImage img;
    for (auto j : free_cols) img.free_part.push_back(to_i64(snf.v[s][j]));
    for (std::size_t tj = 0; tj < torsion_cols.size(); ++tj) {
      BigInt k = diag[torsion_cols[tj]];
      BigInt rem = snf.v[s][torsion_cols[tj]] % k;
      if (rem < 0) rem += k;
      img.torsion_part.push_back(to_i64(rem));
    }
    lat.embedding[survivors[s]] = std::move(img);
  }
  return lat;
}

TorsionFreefication torsion_freefication(const Presentation& p, CompletionOptions opts) {
  TorsionFreefication tf;
  tf.lattice = difference_group(p, opts);
  tf.torsion_order = tf.lattice.torsion_order();
  for (const auto& e : tf.lattice.embedding)
    if (e) tf.monoid_generators.push_back(e->free_part);
  return tf;
}

}  // namespace binoid
