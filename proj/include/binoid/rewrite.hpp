#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binoid/numeric.hpp"
#include "binoid/presentation.hpp"

namespace binoid {

/// An element of a binoid: either the absorbing element, or an irreducible
/// exponent vector (a normal form of the owning RewriteSystem).
struct Element {
  bool infinity = false;
  Word v;

  static Element inf() { return Element{true, {}}; }
  static Element of(Word w) { return Element{false, std::move(w)}; }

  bool is_zero() const { return !infinity && binoid::is_zero(v); }
  friend bool operator==(const Element& a, const Element& b) {
    return a.infinity == b.infinity && (a.infinity || a.v == b.v);
  }
};

/// lhs -> rhs with lhs > rhs in the fixed admissible order.
struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct CompletionOptions {
  std::uint64_t budget = 100000;
};

/// Confluent terminating rewriting system on exponent vectors, equivalent to
/// a presentation's congruence together with its inf-relations. Immutable
/// once built; safe to share across threads.
class RewriteSystem {
 public:
  Element normal_form(Word w) const;
  Element normal_form_of(const Element& e) const;
  Element add(const Element& a, const Element& b) const;

  /// True when the presentation collapsed to the zero binoid (0 = inf).
  bool collapsed() const { return collapsed_; }

  std::size_t generator_count() const { return n_; }
  const std::vector<RewriteRule>& binomial_rules() const { return binomials_; }
  /// Minimal generators of the inf-ideal among irreducible words.
  const std::vector<Word>& monomial_lhs() const { return monomials_; }
  std::uint64_t completion_iterations() const { return iterations_; }
  const Presentation& presentation() const { return base_; }

  /// True iff x lies in the ideal generated by gens (inf always belongs).
  bool ideal_membership(const std::vector<Word>& gens, const Element& x,
                        CompletionOptions opts = {}) const;

  friend RewriteSystem complete(const Presentation& p, CompletionOptions opts);

 private:
  std::size_t n_ = 0;
  bool collapsed_ = false;
  std::vector<RewriteRule> binomials_;
  std::vector<Word> monomials_;
  std::uint64_t iterations_ = 0;
  Presentation base_;
};

/// Knuth-Bendix-style completion on exponent vectors. Critical pairs are the
/// componentwise-max overlaps of rule left-hand sides.
RewriteSystem complete(const Presentation& p, CompletionOptions opts = {});

}  // namespace binoid
