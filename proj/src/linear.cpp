#include "binoid/linear.hpp"

#include <algorithm>
#include <map>

namespace binoid {

std::optional<QVec> solve_linear(QMat a, QVec b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rat inv = a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] /= inv;
    b[row] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  QVec x(n, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::vector<QVec> kernel_basis(QMat a, std::size_t ncols) {
  const std::size_t m = a.size();
  const std::size_t n = ncols;
  for (auto& r : a) r.resize(n, Rat(0));
  std::vector<long> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rat inv = a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<QVec> basis;
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    QVec v(n, Rat(0));
    v[col] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Scale to coprime integer coefficients with positive leading content so
// duplicates collapse. The scale factor is positive, preserving direction.
void normalize(LinIneq& c) {
  BigInt lcm_den = 1;
  for (const auto& x : c.a) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c.b));
  BigInt g = 0;
  auto fold = [&](const Rat& x) {
    BigInt v = numerator(x) * (lcm_den / denominator(x));
    g = boost::multiprecision::gcd(g, v < 0 ? BigInt(-v) : v);
    return v;
  };
  std::vector<BigInt> ints;
  ints.reserve(c.a.size() + 1);
  for (const auto& x : c.a) ints.push_back(fold(x));
  ints.push_back(fold(c.b));
  if (g == 0) g = 1;
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = Rat(ints[i] / g);
  c.b = Rat(ints.back() / g);
}

struct IneqKey {
  std::vector<Rat> a;
  Rat b;
  bool strict;
  bool operator<(const IneqKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return strict < o.strict;
  }
};

}  // namespace

FMResult fm_solve(std::vector<LinIneq> cons, std::size_t nvars, std::size_t cap) {
  // Level v keeps the constraints that still mention x_v when x_v is about to
  // be eliminated; used afterwards for witness back-substitution.
  std::vector<std::vector<LinIneq>> levels(nvars);
  std::size_t produced = cons.size();

  auto ground_violated = [](const LinIneq& c) {
    return c.strict ? !(Rat(0) > c.b) : !(Rat(0) >= c.b);
  };

  for (std::size_t v = nvars; v-- > 0;) {
    std::vector<LinIneq> lows, ups, rest;
    for (auto& c : cons) {
      if (c.a[v] > 0)
        lows.push_back(c);
      else if (c.a[v] < 0)
        ups.push_back(c);
      else
        rest.push_back(std::move(c));
    }
    levels[v].reserve(lows.size() + ups.size());
    for (const auto& c : lows) levels[v].push_back(c);
    for (const auto& c : ups) levels[v].push_back(c);

    std::map<IneqKey, bool> seen;
    std::vector<LinIneq> next;
    for (auto& c : rest) {
      if (std::all_of(c.a.begin(), c.a.end(), [](const Rat& x) { return x == 0; })) {
        if (ground_violated(c)) return {FMStatus::Infeasible, {}};
        continue;
      }
      normalize(c);
      IneqKey key{c.a, c.b, c.strict};
      if (seen.emplace(std::move(key), true).second) next.push_back(std::move(c));
    }
    for (const auto& lo : lows) {
      for (const auto& up : ups) {
        LinIneq comb;
        comb.a.assign(nvars, Rat(0));
        Rat s = lo.a[v];        // > 0
        Rat t = -up.a[v];       // > 0
        for (std::size_t j = 0; j < nvars; ++j) comb.a[j] = t * lo.a[j] + s * up.a[j];
        comb.b = t * lo.b + s * up.b;
        comb.strict = lo.strict || up.strict;
        if (std::all_of(comb.a.begin(), comb.a.end(), [](const Rat& x) { return x == 0; })) {
          if (ground_violated(comb)) return {FMStatus::Infeasible, {}};
          continue;
        }
        normalize(comb);
        if (++produced > cap) return {FMStatus::CapExceeded, {}};
        IneqKey key{comb.a, comb.b, comb.strict};
        if (seen.emplace(std::move(key), true).second) next.push_back(std::move(comb));
      }
    }
    cons = std::move(next);
  }
  for (const auto& c : cons)
    if (ground_violated(c)) return {FMStatus::Infeasible, {}};

  // Back-substitute a witness from the lowest variable up.
  QVec x(nvars, Rat(0));
  for (std::size_t v = 0; v < nvars; ++v) {
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rat lo, up;
    for (const auto& c : levels[v]) {
      Rat rest = c.b;
      for (std::size_t j = 0; j < nvars; ++j)
        if (j != v) rest -= c.a[j] * x[j];
      Rat bound = rest / c.a[v];
      if (c.a[v] > 0) {
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = c.strict;
          has_lo = true;
        } else if (bound == lo) {
          lo_strict = lo_strict || c.strict;
        }
      } else {
        if (!has_up || bound < up) {
          up = bound;
          up_strict = c.strict;
          has_up = true;
        } else if (bound == up) {
          up_strict = up_strict || c.strict;
        }
      }
    }
    if (has_lo && has_up) {
      if (lo < up)
        x[v] = (lo + up) / 2;
      else
        x[v] = lo;  // lo == up, both non-strict (feasibility already checked)
    } else if (has_lo) {
      x[v] = lo_strict ? lo + 1 : lo;
    } else if (has_up) {
      x[v] = up_strict ? up - 1 : up;
    } else {
      x[v] = 0;
    }
  }
  return {FMStatus::Feasible, std::move(x)};
}

}  // namespace binoid
