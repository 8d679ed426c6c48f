#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binoid/numeric.hpp"
#include "binoid/presentation.hpp"
#include "binoid/rewrite.hpp"
#include "binoid/spectrum.hpp"

namespace binoid {

struct EnumerationOptions {
  std::size_t cap = 10000000;
  CompletionOptions completion;
  UnitSearchOptions units;
};

/// Finitely generated ideal, generators kept as normal forms (inf dropped).
struct IdealSpec {
  enum class Primary { Unverified, Verified, Refuted, Asserted };
  std::vector<Word> generators;
  Primary primary_status = Primary::Unverified;
  /// Smallest d with d * g in the ideal, per maximal-ideal generator
  /// (populated by verify_primary).
  std::vector<std::int64_t> primary_witnesses;
};

/// Normalizes generator words and drops inf images.
IdealSpec make_ideal(const Presentation& p, const std::vector<Word>& gens,
                     CompletionOptions opts = {});

/// [q]I = <q*a | a in I>, generated by the q-fold multiples of the generators.
IdealSpec frobenius_sum(const IdealSpec& ideal, std::int64_t q);

/// N_+ = the ideal of the non-unit generators.
IdealSpec maximal_ideal(const Presentation& p, UnitSearchOptions opts = {});

/// The four supported N-set shapes.
struct NSetSpec {
  enum class Kind { WholeBinoid, Ideal, Quotient, PointedUnion };
  Kind kind = Kind::WholeBinoid;
  std::vector<Word> ideal_generators;
  std::vector<NSetSpec> parts;

  static NSetSpec whole() { return {}; }
  static NSetSpec ideal(std::vector<Word> gens) {
    return {Kind::Ideal, std::move(gens), {}};
  }
  static NSetSpec quotient(std::vector<Word> gens) {
    return {Kind::Quotient, std::move(gens), {}};
  }
  static NSetSpec pointed_union(std::vector<NSetSpec> parts) {
    return {Kind::PointedUnion, {}, std::move(parts)};
  }
};

struct HKSample {
  std::int64_t q = 1;
  std::uint64_t count = 0;
};

/// All non-inf elements of N/<j>, as normal forms of the quotient system.
/// Throws EnumerationCapExceeded when the quotient is not finite within cap.
std::vector<Word> residue_enumerate(const Presentation& p, const IdealSpec& j,
                                    EnumerationOptions opts = {});

/// hkf(n, T, q) = # T/([q]n + T).
HKSample hkf(const Presentation& p, const IdealSpec& n, const NSetSpec& t, std::int64_t q,
             EnumerationOptions opts = {});

struct HKRow {
  std::int64_t q = 1;
  std::optional<std::uint64_t> count;
  std::string error;
};

std::vector<HKRow> hkf_table(const Presentation& p, const IdealSpec& n, const NSetSpec& t,
                             const std::vector<std::int64_t>& qs, EnumerationOptions opts = {});

struct FourCounts {
  std::uint64_t n_mod_j = 0;       // # N/J
  std::uint64_t meet_part = 0;     // # (I cap J)/(J+I)
  std::uint64_t ideal_part = 0;    // # I/(J+I)
  std::uint64_t quotient_part = 0; // # (N/I)/(J + N/I)
};

/// # N/J + # (I cap J)/(I+J) == # I/(I+J) + # (N/I)/(J+N/I).
bool verify_counting_identity(const Presentation& p, const IdealSpec& i, const IdealSpec& j,
                              EnumerationOptions opts = {}, FourCounts* counts = nullptr);

/// hkf(M ^ N, q) == hkf(M, q) * hkf(N, q) for the maximal ideals.
bool verify_smash_multiplicativity(const Presentation& a, const Presentation& b, std::int64_t q,
                                   EnumerationOptions opts = {});

struct PrimaryVerification {
  IdealSpec::Primary status = IdealSpec::Primary::Unverified;
  std::string detail;
  std::uint64_t quotient_size = 0;
};

/// Enumerates N/n and checks that every non-unit of the quotient is
/// nilpotent; fills in primary witnesses on success.
PrimaryVerification verify_primary(const Presentation& p, IdealSpec& n,
                                   EnumerationOptions opts = {});

}  // namespace binoid
