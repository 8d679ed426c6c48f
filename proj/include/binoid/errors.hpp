#pragma once

#include <stdexcept>
#include <string>

namespace binoid {

/// Syntax or validation error in the presentation DSL.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

/// Completion ran out of its critical-pair budget before reaching confluence.
struct CompletionBudgetExceeded : std::runtime_error {
  std::string unresolved_pair;
  explicit CompletionBudgetExceeded(std::string pair)
      : std::runtime_error("completion budget exhausted; unresolved pair: " + pair),
        unresolved_pair(std::move(pair)) {}
};

/// Residue enumeration exceeded its element cap.
struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(std::size_t cap)
      : std::runtime_error("residue enumeration exceeded cap of " + std::to_string(cap) +
                           " elements") {}
};

/// Spectrum refused to enumerate generator subsets.
struct SubsetCapExceeded : std::runtime_error {
  explicit SubsetCapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("generator count " + std::to_string(n) +
                           " exceeds subset enumeration cap " + std::to_string(cap)) {}
};

/// A hypothesis the caller asserted (or asked to verify) was positively refuted.
struct RefutedHypothesis : std::runtime_error {
  explicit RefutedHypothesis(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem hypothesis is not met (or could not be established), so the
/// requested exact computation is unavailable.
struct UnmetHypothesis : std::runtime_error {
  explicit UnmetHypothesis(const std::string& what) : std::runtime_error(what) {}
};

/// The complement region of the shifted-cone union is unbounded; the ideal
/// fed to the toric volume is not primary.
struct UnboundedRegion : std::runtime_error {
  UnboundedRegion() : std::runtime_error("cone complement region is unbounded (ideal not primary)") {}
};

/// Ambient dimension exceeds the exact-volume cap.
struct DimensionCapExceeded : std::runtime_error {
  explicit DimensionCapExceeded(std::size_t d, std::size_t cap)
      : std::runtime_error("ambient dimension " + std::to_string(d) +
                           " exceeds exact toric cap " + std::to_string(cap)) {}
};

}  // namespace binoid
