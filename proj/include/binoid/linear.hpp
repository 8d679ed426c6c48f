#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binoid/numeric.hpp"

namespace binoid {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/// One exact rational solution of A x = b (free variables set to 0), or
/// nullopt when the system is inconsistent.
std::optional<QVec> solve_linear(QMat a, QVec b);

/// Basis of the kernel {x : A x = 0} of an m x n rational matrix.
std::vector<QVec> kernel_basis(QMat a, std::size_t ncols);

/// Linear inequality a . x >= b (or > b when strict).
struct LinIneq {
  QVec a;
  Rat b;
  bool strict = false;
};

enum class FMStatus { Feasible, Infeasible, CapExceeded };

struct FMResult {
  FMStatus status;
  QVec witness;  // valid when Feasible
};

/// Exact Fourier-Motzkin feasibility with witness reconstruction. The cap
/// bounds the number of derived inequalities.
FMResult fm_solve(std::vector<LinIneq> cons, std::size_t nvars, std::size_t cap = 200000);

}  // namespace binoid
