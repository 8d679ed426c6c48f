#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace binoid {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// An exponent vector over the generators of a presentation. The all-zero
/// word is the neutral element 0.
using Word = std::vector<std::int64_t>;

inline Word zero_word(std::size_t n) { return Word(n, 0); }

inline bool is_zero(const Word& w) {
  for (auto e : w)
    if (e != 0) return false;
  return true;
}

inline std::int64_t degree(const Word& w) {
  std::int64_t d = 0;
  for (auto e : w) d += e;
  return d;
}

/// Componentwise u <= v (u divides v in multiplicative language).
inline bool divides(const Word& u, const Word& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

inline Word word_add(const Word& u, const Word& v) {
  Word r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

/// v - u, valid when u divides v.
inline Word word_sub(const Word& v, const Word& u) {
  Word r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] - u[i];
  return r;
}

inline Word word_max(const Word& u, const Word& v) {
  Word r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] > v[i] ? u[i] : v[i];
  return r;
}

inline Word word_scale(const Word& u, std::int64_t k) {
  Word r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] * k;
  return r;
}

inline bool supports_overlap(const Word& u, const Word& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0 && v[i] > 0) return true;
  return false;
}

/// 0/1 indicator of the support of w.
inline Word support_indicator(const Word& w) {
  Word r(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i] > 0 ? 1 : 0;
  return r;
}

/// The fixed admissible order: total degree first, then reverse-lexicographic
/// by generator index (equal-degree words compare by the last differing
/// coordinate, the one with the smaller entry there being the larger word).
/// Returns <0, 0, >0 for u < v, u == v, u > v.
inline int compare_order(const Word& u, const Word& v) {
  std::int64_t du = degree(u), dv = degree(v);
  if (du != dv) return du < dv ? -1 : 1;
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
  }
  return 0;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : w) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace binoid
