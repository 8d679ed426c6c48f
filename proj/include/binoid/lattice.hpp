#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binoid/numeric.hpp"
#include "binoid/presentation.hpp"
#include "binoid/rewrite.hpp"

namespace binoid {

using IMat = std::vector<std::vector<BigInt>>;

/// U * A * V = D with D diagonal, d1 | d2 | ..., U and V unimodular.
struct SNFResult {
  IMat u;
  IMat d;
  IMat v;
  std::size_t rank = 0;
  std::vector<BigInt> diagonal() const;
};

SNFResult smith_normal_form(IMat a);

/// Exact determinant (fraction-free), for square matrices.
BigInt determinant(IMat a);

IMat identity_matrix(std::size_t n);
IMat matrix_product(const IMat& a, const IMat& b);

/// Image of a generator in diff N = Z^m x (Z/k_1 x ... x Z/k_l).
struct GeneratorImage {
  std::vector<std::int64_t> free_part;     // length m
  std::vector<std::int64_t> torsion_part;  // length l, reduced mod k_j
};

/// diff N of the monoid of non-inf elements, decomposed by SNF of the lattice
/// spanned by the completed binomial relations.
struct LatticeData {
  std::size_t rank = 0;                          // m
  std::vector<std::int64_t> torsion_invariants;  // k_j >= 2, divisibility chain
  std::vector<std::optional<GeneratorImage>> embedding;  // per generator; nullopt = killed
  IMat relation_matrix;                          // rows = lhs - rhs over all generators
  std::uint64_t torsion_order() const;
  /// Image of a word; nullopt when it touches a killed generator.
  std::optional<GeneratorImage> word_image(const Word& w) const;
};

LatticeData difference_group(const Presentation& p, CompletionOptions opts = {});

struct TorsionFreefication {
  /// Projections of the surviving generators to Z^m (the generators of N_tf).
  std::vector<std::vector<std::int64_t>> monoid_generators;
  std::uint64_t torsion_order = 1;
  LatticeData lattice;
};

TorsionFreefication torsion_freefication(const Presentation& p, CompletionOptions opts = {});

}  // namespace binoid
