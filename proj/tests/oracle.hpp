// Test-only brute-force oracles, independent of the rewrite engine: words are
// closed under single relation applications up to a degree bound.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "binoid/numeric.hpp"
#include "binoid/presentation.hpp"

namespace binoid::testing {

class WordDsu {
 public:
  explicit WordDsu(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

inline void enumerate_words(std::size_t n, std::int64_t bound, Word& cur,
                            std::vector<Word>& out, std::size_t pos = 0,
                            std::int64_t used = 0) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t e = 0; e + used <= bound; ++e) {
    cur[pos] = e;
    enumerate_words(n, bound, cur, out, pos + 1, used + e);
  }
  cur[pos] = 0;
}

/// # N/<kill> by word enumeration: all words of degree <= bound, merged under
/// one-step relation applications (in both directions), with ideal words
/// contracted to a point. The union-find closure gives the congruence classes
/// among words of bounded degree; callers pick a bound that dominates the
/// degrees that matter for the case at hand.
inline std::uint64_t brute_count(const Presentation& p, const std::vector<Word>& kill,
                                 std::int64_t bound) {
  const std::size_t n = p.generator_count();
  std::vector<Word> words;
  Word cur(n, 0);
  enumerate_words(n, bound, cur, words);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  const std::size_t inf_node = words.size();
  WordDsu dsu(words.size() + 1);

  auto merge_step = [&](const Word& w, const Word& from, const Word& to) {
    if (!divides(from, w)) return;
    Word img = word_add(word_sub(w, from), to);
    if (degree(img) > bound) return;
    dsu.unite(index.at(w), index.at(img));
  };
  for (const auto& w : words) {
    for (const auto& c : p.congruences) {
      merge_step(w, c.lhs, c.rhs);
      merge_step(w, c.rhs, c.lhs);
    }
    for (const auto& r : p.infinity_relations)
      if (divides(r, w)) dsu.unite(index.at(w), inf_node);
    for (const auto& k : kill)
      if (divides(k, w)) dsu.unite(index.at(w), inf_node);
  }
  std::map<std::size_t, bool> roots;
  for (const auto& w : words) {
    std::size_t r = dsu.find(index.at(w));
    if (r != dsu.find(inf_node)) roots[r] = true;
  }
  return roots.size();
}

/// Monomial counter for Stanley-Reisner binoids: lattice points with all
/// coordinates below q whose support is a face.
inline std::uint64_t sr_survivor_count(const SimplicialComplex& c, std::int64_t q) {
  const std::size_t n = c.vertices.size();
  std::vector<std::uint32_t> facet_masks;
  for (const auto& f : c.facets) {
    std::uint32_t m = 0;
    for (auto v : f) m |= 1u << v;
    facet_masks.push_back(m);
  }
  std::uint64_t count = 0;
  Word a(n, 0);
  for (;;) {
    std::uint32_t supp = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] > 0) supp |= 1u << i;
    for (auto m : facet_masks)
      if ((supp & m) == supp) {
        ++count;
        break;
      }
    std::size_t pos = 0;
    while (pos < n) {
      if (++a[pos] < q) break;
      a[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return count;
}

}  // namespace binoid::testing
