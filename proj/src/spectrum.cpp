#include "binoid/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "binoid/errors.hpp"
#include "binoid/linear.hpp"
#include "binoid/parallel.hpp"

namespace binoid {
namespace {

std::vector<Word> subset_words(std::size_t n, const std::vector<std::size_t>& subset) {
  std::vector<Word> gens;
  for (auto g : subset) {
    Word w(n, 0);
    w[g] = 1;
    gens.push_back(std::move(w));
  }
  return gens;
}

}  // namespace

std::vector<std::size_t> candidate_ideal_closure(const Presentation& p,
                                                 const std::vector<std::size_t>& subset,
                                                 CompletionOptions opts) {
  const std::size_t n = p.generator_count();
  RewriteSystem sys = complete(quotient_by_ideal(p, subset_words(n, subset)), opts);
  std::vector<std::size_t> closure;
  for (std::size_t g = 0; g < n; ++g) {
    Word w(n, 0);
    w[g] = 1;
    if (sys.normal_form(std::move(w)).infinity) closure.push_back(g);
  }
  return closure;
}

bool is_integral_quotient(const RewriteSystem& quotient_system) {
  if (quotient_system.collapsed()) return false;
  for (const auto& m : quotient_system.monomial_lhs()) {
    std::size_t nonzero = 0;
    bool unit_exp = true;
    for (auto e : m) {
      if (e != 0) {
        ++nonzero;
        if (e != 1) unit_exp = false;
      }
    }
    if (nonzero != 1 || !unit_exp) return false;
  }
  return true;
}

bool is_integral(const Presentation& p, CompletionOptions opts) {
  return is_integral_quotient(complete(p, opts));
}

SpectrumReport spectrum(const Presentation& p, SpectrumOptions opts) {
  const std::size_t n = p.generator_count();
  if (n > opts.subset_cap) throw SubsetCapExceeded(n, opts.subset_cap);

  std::vector<std::uint32_t> subsets;
  subsets.reserve(1u << n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  // Closures are independent per subset; compute them in parallel and merge
  // in subset order.
  std::vector<std::vector<std::size_t>> closures(subsets.size());
  parallel_for_index(subsets.size(), [&](std::size_t i) {
    std::vector<std::size_t> sub;
    for (std::size_t g = 0; g < n; ++g)
      if ((subsets[i] >> g) & 1u) sub.push_back(g);
    closures[i] = candidate_ideal_closure(p, sub, opts.completion);
  });

  SpectrumReport rep;
  std::map<std::vector<std::size_t>, bool> closure_seen;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& cl = closures[i];
    auto [it, inserted] = closure_seen.try_emplace(cl, false);
    if (!inserted) continue;
    RewriteSystem qsys = complete(quotient_by_ideal(p, subset_words(n, cl)), opts.completion);
    if (!is_integral_quotient(qsys)) continue;
    it->second = true;
    PrimeIdeal prime;
    for (std::size_t g = 0; g < n; ++g)
      if ((subsets[i] >> g) & 1u) prime.generator_subset.push_back(g);
    prime.closure = cl;
    rep.primes.push_back(std::move(prime));
  }
  std::sort(rep.primes.begin(), rep.primes.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.closure.size() != b.closure.size()) return a.closure.size() < b.closure.size();
    return a.closure < b.closure;
  });

  // Longest chains upward in the inclusion poset of prime closures.
  const std::size_t np = rep.primes.size();
  auto contains = [&](std::size_t big, std::size_t small) {
    const auto& a = rep.primes[big].closure;
    const auto& b = rep.primes[small].closure;
    return a.size() > b.size() && std::includes(a.begin(), a.end(), b.begin(), b.end());
  };
  std::vector<int> up(np, 0);
  for (std::size_t i = np; i-- > 0;) {
    for (std::size_t j = i + 1; j < np; ++j)
      if (contains(j, i)) up[i] = std::max(up[i], up[j] + 1);
  }
  rep.quotient_dimensions = up;
  rep.dimension = 0;
  for (auto u : up) rep.dimension = std::max(rep.dimension, u);
  for (std::size_t i = 0; i < np; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < np && minimal; ++j)
      if (j != i && contains(i, j)) minimal = false;
    if (minimal) rep.minimal_prime_indices.push_back(i);
  }
  return rep;
}

Ternary is_reduced(const Presentation& p, std::int64_t multiple_cap, CompletionOptions opts) {
  RewriteSystem sys = complete(p, opts);
  if (sys.collapsed()) return Ternary::True;  // nil({inf}) = {inf}
  const auto& monos = sys.monomial_lhs();
  if (monos.empty()) return Ternary::True;

  // A smash product is reduced iff every factor is.
  auto comps = relation_components(p);
  if (comps.size() > 1) {
    Ternary acc = Ternary::True;
    for (const auto& comp : comps) {
      Ternary r = is_reduced(restrict_to(p, comp), multiple_cap, opts);
      if (r == Ternary::False) return Ternary::False;
      if (r == Ternary::Unknown) acc = Ternary::Unknown;
    }
    return acc;
  }

  bool all_basis = true;
  bool all_squarefree = true;
  for (const auto& m : monos) {
    std::size_t nonzero = 0;
    std::int64_t max_exp = 0;
    for (auto e : m) {
      if (e != 0) ++nonzero;
      max_exp = std::max(max_exp, e);
      if (e > 1) all_squarefree = false;
    }
    if (nonzero != 1 || max_exp != 1) all_basis = false;
  }
  // Basis-vector monomials only delete generators; nothing else reaches inf.
  if (all_basis) return Ternary::True;

  const bool monomial_only = sys.binomial_rules().empty();
  if (monomial_only) {
    // Exact radical test: reduced iff every minimal inf-generator is squarefree.
    return all_squarefree ? Ternary::True : Ternary::False;
  }

  // Mixed system: bounded witness search.
  auto nilpotent = [&](const Word& v) {
    Element e = sys.normal_form(v);
    if (e.infinity || is_zero(e.v)) return false;
    Word acc = e.v;
    for (std::int64_t k = 2; k <= multiple_cap; ++k) {
      Element s = sys.add(Element::of(acc), e);
      if (s.infinity) return true;
      acc = std::move(s.v);
    }
    return false;
  };
  const std::size_t n = p.generator_count();
  std::vector<Word> candidates;
  for (std::size_t g = 0; g < n; ++g) {
    Word w(n, 0);
    w[g] = 1;
    candidates.push_back(std::move(w));
  }
  for (const auto& m : monos) candidates.push_back(support_indicator(m));
  // Low-degree normal forms, bounded.
  {
    std::int64_t dmax = 0;
    for (const auto& m : monos) dmax = std::max(dmax, degree(m));
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word> frontier;
    Word zero(n, 0);
    seen.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty() && seen.size() < 2000) {
      Word cur = std::move(frontier.front());
      frontier.pop_front();
      for (std::size_t g = 0; g < n; ++g) {
        Word next = cur;
        next[g] += 1;
        Element e = sys.normal_form(next);
        if (e.infinity || degree(e.v) > dmax) continue;
        if (seen.insert(e.v).second) {
          candidates.push_back(e.v);
          frontier.push_back(std::move(e.v));
        }
      }
    }
  }
  for (const auto& v : candidates)
    if (nilpotent(v)) return Ternary::False;
  return Ternary::Unknown;
}

UnitInfo unit_info(const Presentation& p, UnitSearchOptions opts) {
  UnitInfo info;
  RewriteSystem sys = complete(p, opts.completion);
  const std::size_t n = p.generator_count();
  if (sys.collapsed()) {
    info.order = 1;
    return info;
  }

  std::vector<bool> is_unit_gen(n, false), killed(n, false);
  for (const auto& u : p.unit_factors) is_unit_gen[u.generator] = true;
  for (std::size_t g = 0; g < n; ++g) {
    Word w(n, 0);
    w[g] = 1;
    Element e = sys.normal_form(std::move(w));
    if (e.infinity) killed[g] = true;
    if (e.is_zero()) is_unit_gen[g] = true;  // generator equal to 0
  }

  // Bounded search for undeclared inverses g + w = 0.
  for (std::size_t g = 0; g < n; ++g) {
    if (is_unit_gen[g] || killed[g]) continue;
    Word start(n, 0);
    start[g] = 1;
    Element e0 = sys.normal_form(start);
    if (e0.infinity) continue;
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word> frontier;
    seen.insert(e0.v);
    frontier.push_back(e0.v);
    bool found = false;
    while (!frontier.empty() && !found && seen.size() < opts.subgroup_cap) {
      Word cur = std::move(frontier.front());
      frontier.pop_front();
      for (std::size_t h = 0; h < n && !found; ++h) {
        Word next = cur;
        next[h] += 1;
        Element e = sys.normal_form(std::move(next));
        if (e.infinity || degree(e.v) > opts.inverse_degree_bound + 1) continue;
        if (e.is_zero()) found = true;
        else if (seen.insert(e.v).second)
          frontier.push_back(std::move(e.v));
      }
    }
    if (found) is_unit_gen[g] = true;
  }
  for (std::size_t g = 0; g < n; ++g)
    if (is_unit_gen[g]) info.unit_generators.push_back(g);

  // Positive-grading certificate: a rational weight vector, zero only on unit
  // or killed generators, vanishing on every completed binomial relation.
  {
    std::vector<LinIneq> cons;
    for (const auto& rule : sys.binomial_rules()) {
      LinIneq eq1, eq2;
      eq1.a.reserve(n);
      for (std::size_t g = 0; g < n; ++g) eq1.a.push_back(Rat(rule.lhs[g] - rule.rhs[g]));
      eq1.b = 0;
      eq2 = eq1;
      for (auto& x : eq2.a) x = -x;
      cons.push_back(std::move(eq1));
      cons.push_back(std::move(eq2));
    }
    for (std::size_t g = 0; g < n; ++g) {
      LinIneq c;
      c.a.assign(n, Rat(0));
      c.a[g] = 1;
      c.b = (is_unit_gen[g] || killed[g]) ? Rat(0) : Rat(1);
      cons.push_back(std::move(c));
    }
    FMResult r = fm_solve(std::move(cons), n);
    if (r.status != FMStatus::Feasible) return info;  // order stays unknown
  }

  // Units are exactly the normal forms of words over the unit generators.
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> frontier;
  Word zero(n, 0);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    if (seen.size() > opts.subgroup_cap) return info;  // unknown
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto g : info.unit_generators) {
      Word next = cur;
      next[g] += 1;
      Element e = sys.normal_form(std::move(next));
      if (e.infinity) continue;
      if (seen.insert(e.v).second) frontier.push_back(std::move(e.v));
    }
  }
  info.unit_elements.assign(seen.begin(), seen.end());
  std::sort(info.unit_elements.begin(), info.unit_elements.end());
  info.order = info.unit_elements.size();
  return info;
}

std::optional<std::uint64_t> unit_group_order(const Presentation& p, UnitSearchOptions opts) {
  return unit_info(p, opts).order;
}

std::optional<CancellativityWitness> refute_cancellative(const Presentation& p,
                                                         std::size_t element_cap,
                                                         CompletionOptions opts) {
  RewriteSystem sys = complete(p, opts);
  if (sys.collapsed()) return std::nullopt;
  const std::size_t n = p.generator_count();
  std::vector<Word> elems;
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> frontier;
  Word zero(n, 0);
  seen.insert(zero);
  frontier.push_back(zero);
  elems.push_back(zero);
  while (!frontier.empty() && elems.size() < element_cap) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t g = 0; g < n; ++g) {
      Word next = cur;
      next[g] += 1;
      Element e = sys.normal_form(std::move(next));
      if (e.infinity) continue;
      if (seen.insert(e.v).second) {
        elems.push_back(e.v);
        frontier.push_back(std::move(e.v));
        if (elems.size() >= element_cap) break;
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  for (const auto& c : elems) {
    std::unordered_map<Word, std::size_t, WordHash> image;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Element s = sys.normal_form(word_add(elems[i], c));
      if (s.infinity) continue;
      auto [it, inserted] = image.try_emplace(s.v, i);
      if (!inserted && elems[it->second] != elems[i])
        return CancellativityWitness{elems[it->second], elems[i], c};
    }
  }
  return std::nullopt;
}

}  // namespace binoid
