#pragma once

#include <cstdint>
#include <vector>

#include "binoid/numeric.hpp"

namespace binoid {

struct ToricOptions {
  std::size_t exact_dimension_cap = 3;
  std::size_t cell_cap = 20000;
};

/// Hilbert-Kunz multiplicity of a positive affine monoid F = <gens> with
/// respect to the primary ideal <ideal_gens>: the volume of the region inside
/// the cone C spanned by the generators and outside every ideal-generator
/// translate f + C, measured against the lattice generated by the monoid
/// generators. Exact rational arithmetic throughout.
Rat toric_ehk(const std::vector<std::vector<std::int64_t>>& monoid_gens,
              const std::vector<std::vector<std::int64_t>>& ideal_gens,
              ToricOptions opts = {});

}  // namespace binoid
