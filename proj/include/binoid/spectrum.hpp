#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binoid/numeric.hpp"
#include "binoid/presentation.hpp"
#include "binoid/rewrite.hpp"

namespace binoid {

enum class Ternary { False, True, Unknown };

struct PrimeIdeal {
  std::vector<std::size_t> generator_subset;  // a minimal generating subset
  std::vector<std::size_t> closure;           // all generators inside the ideal
};

struct SpectrumReport {
  std::vector<PrimeIdeal> primes;
  std::vector<std::size_t> minimal_prime_indices;
  int dimension = 0;                       // longest strict chain of primes
  std::vector<int> quotient_dimensions;    // dim N/p per prime
};

struct SpectrumOptions {
  std::size_t subset_cap = 20;
  CompletionOptions completion;
};

/// Fixpoint of generators forced into the ideal generated by the subset.
std::vector<std::size_t> candidate_ideal_closure(const Presentation& p,
                                                 const std::vector<std::size_t>& subset,
                                                 CompletionOptions opts = {});

/// True iff the completed quotient system presents an integral binoid: every
/// minimal generator of its inf-ideal is a standard basis vector.
bool is_integral_quotient(const RewriteSystem& quotient_system);

bool is_integral(const Presentation& p, CompletionOptions opts = {});

SpectrumReport spectrum(const Presentation& p, SpectrumOptions opts = {});

/// Bounded nilpotence check: definite where the system's monomial part allows
/// an exact radical test, otherwise a witness search up to `multiple_cap`.
Ternary is_reduced(const Presentation& p, std::int64_t multiple_cap = 64,
                   CompletionOptions opts = {});

struct UnitSearchOptions {
  std::int64_t inverse_degree_bound = 12;
  std::size_t subgroup_cap = 4096;
  CompletionOptions completion;
};

struct UnitInfo {
  std::optional<std::uint64_t> order;   // nullopt = unknown
  std::vector<Word> unit_elements;      // normal forms, when order is known
  std::vector<std::size_t> unit_generators;
};

UnitInfo unit_info(const Presentation& p, UnitSearchOptions opts = {});

/// |N^x| if it can be established, unknown otherwise.
std::optional<std::uint64_t> unit_group_order(const Presentation& p, UnitSearchOptions opts = {});

struct CancellativityWitness {
  Word a, b, c;  // NF(a+c) == NF(b+c) != inf but NF(a) != NF(b)
};

/// Bounded refutation search for the cancellativity assertion; nullopt means
/// no witness found within the bound (the assertion stands).
std::optional<CancellativityWitness> refute_cancellative(const Presentation& p,
                                                         std::size_t element_cap = 400,
                                                         CompletionOptions opts = {});

}  // namespace binoid
