#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binoid/numeric.hpp"

namespace binoid {

/// A congruence relation lhs = rhs between two words.
struct Congruence {
  Word lhs;
  Word rhs;
};

/// A declared finite cyclic group factor: the generator `generator` carries
/// the relation order * generator = 0 and is known to be a unit.
struct UnitFactor {
  std::size_t generator;
  std::int64_t order;
};

/// A finitely generated commutative binoid, by generators and relations.
/// Words are exponent vectors indexed by `generators`; commutativity is baked
/// into the data model. The zero binoid (0 = inf) is a legal value.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Congruence> congruences;
  std::vector<Word> infinity_relations;
  std::vector<UnitFactor> unit_factors;

  std::size_t generator_count() const { return generators.size(); }
};

struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::size_t>> facets;
};

/// (N^n)^inf: n generators, no relations.
Presentation free_binoid(std::size_t n);

/// (Z/k)^inf: one generator t with k*t = 0, recorded as a unit factor. k >= 2.
Presentation group_binoid(std::int64_t k);

/// Smash product over the trivial binoid: disjoint union of generators and
/// relations. Colliding generator names from `b` are suffixed deterministically.
Presentation smash(const Presentation& a, const Presentation& b);

/// Residue class binoid N/<gens>: appends the given words as inf-relations.
Presentation quotient_by_ideal(const Presentation& p, const std::vector<Word>& gens);

/// Free binoid on the vertices modulo one squarefree inf-relation per minimal
/// nonface of the complex.
Presentation stanley_reisner(const SimplicialComplex& c);

/// Parses the presentation DSL. Throws ParseError with line/column on bad input.
Presentation parse_presentation(std::string_view text);

/// Pretty-printer; parse_presentation(print_presentation(p)) reconstructs p.
std::string print_presentation(const Presentation& p);

/// Parses a single word ("3x+y", "0") over p's generators.
Word parse_word(const Presentation& p, std::string_view text);

/// Renders a word in the DSL's additive notation.
std::string format_word(const Presentation& p, const Word& w);

/// Validates structural invariants (unique names, matching lengths,
/// non-negative exponents, unit orders >= 2). Throws std::invalid_argument.
void validate(const Presentation& p);

/// Name-order canonicalization used by tests to compare presentations up to
/// generator renaming.
Presentation canonicalized(const Presentation& p);

bool equivalent_presentations(const Presentation& a, const Presentation& b);

/// Connected components of the generators under co-occurrence in relations:
/// the presentation is the smash product of its components.
std::vector<std::vector<std::size_t>> relation_components(const Presentation& p);

/// Sub-presentation on a generator subset. Relations touching generators
/// outside the subset are rejected.
Presentation restrict_to(const Presentation& p, const std::vector<std::size_t>& gens);

/// Restriction of a word to a generator subset; nullopt when the word touches
/// a generator outside the subset.
std::optional<Word> restrict_word(const Word& w, const std::vector<std::size_t>& gens);

}  // namespace binoid
