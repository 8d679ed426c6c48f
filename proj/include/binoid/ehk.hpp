#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binoid/hk.hpp"
#include "binoid/lattice.hpp"
#include "binoid/numeric.hpp"
#include "binoid/presentation.hpp"
#include "binoid/spectrum.hpp"
#include "binoid/toric.hpp"

namespace binoid {

struct TraceStep {
  enum class Kind {
    ZeroBinoid,
    SmashFactor,
    MinimalPrimeSplit,
    TorsionFactor,
    ToricVolume,
    EstimateFit,
  };
  Kind kind;
  std::string detail;
  Rat value;
};

std::string trace_kind_name(TraceStep::Kind k);

struct EHKResult {
  bool exact = true;
  Rat value;              // when exact
  double estimate = 0.0;  // when !exact
  double error_bound = 0.0;
  int dimension = 0;
  std::vector<TraceStep> trace;
};

struct EhkOptions {
  EnumerationOptions enumeration;
  SpectrumOptions spectrum_opts;
  ToricOptions toric;
  std::int64_t reduced_cap = 64;
  std::size_t cancellativity_cap = 200;
  bool skip_primary_verification = false;
  bool skip_cancellativity_check = false;
};

/// Exact Hilbert-Kunz multiplicity of a finitely generated, semipositive,
/// cancellative (asserted), reduced binoid with respect to a primary ideal:
/// smash factorization, minimal-prime reduction, torsion-freefication, and
/// the toric cone volume, with a trace of every applied step.
EHKResult ehk(const Presentation& p, IdealSpec n, EhkOptions opts = {});

/// Least-squares fit of hkf(q) = c q^d + c' q^(d-1) over the sample schedule.
EHKResult ehk_estimate(const Presentation& p, IdealSpec n,
                       std::vector<std::int64_t> schedule = {}, EhkOptions opts = {});

/// Product rule for smash inputs; both sides must be in the same mode.
EHKResult ehk_of_smash(const EHKResult& a, const EHKResult& b);

}  // namespace binoid
