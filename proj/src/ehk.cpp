#include "binoid/ehk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "binoid/errors.hpp"

namespace binoid {
namespace {

std::string join_generators(const Presentation& p, const std::vector<std::size_t>& gens) {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << p.generators[gens[i]];
  return os.str();
}

EHKResult ehk_single_component(const Presentation& p, IdealSpec n, const EhkOptions& opts);

/// Integral branch: difference group, torsion factor, toric volume.
EHKResult ehk_integral(const Presentation& p, const IdealSpec& n, int expected_dim,
                       const EhkOptions& opts) {
  LatticeData lat = difference_group(p, opts.enumeration.completion);
  if (static_cast<int>(lat.rank) != expected_dim)
    throw UnmetHypothesis(
        "difference-group rank disagrees with the combinatorial dimension; "
        "the cancellativity assertion looks wrong");
  std::vector<std::vector<std::int64_t>> monoid_gens;
  for (const auto& e : lat.embedding)
    if (e) monoid_gens.push_back(e->free_part);
  std::vector<std::vector<std::int64_t>> ideal_gens;
  for (const auto& g : n.generators) {
    auto img = lat.word_image(g);
    if (!img) continue;  // generator already inf in this quotient
    ideal_gens.push_back(img->free_part);
  }
  Rat volume = toric_ehk(monoid_gens, ideal_gens, opts.toric);
  EHKResult r;
  r.dimension = static_cast<int>(lat.rank);
  r.value = Rat(lat.torsion_order()) * volume;
  {
    std::ostringstream os;
    os << "|T| = " << lat.torsion_order();
    if (!lat.torsion_invariants.empty()) {
      os << " (";
      for (std::size_t i = 0; i < lat.torsion_invariants.size(); ++i)
        os << (i ? " x " : "") << "Z/" << lat.torsion_invariants[i];
      os << ")";
    }
    r.trace.push_back({TraceStep::Kind::TorsionFactor, os.str(), Rat(lat.torsion_order())});
  }
  r.trace.push_back({TraceStep::Kind::ToricVolume, "cone complement volume", volume});
  return r;
}

EHKResult ehk_single_component(const Presentation& p, IdealSpec n, const EhkOptions& opts) {
  if (!opts.skip_cancellativity_check) {
    if (auto w = refute_cancellative(p, opts.cancellativity_cap, opts.enumeration.completion))
      throw RefutedHypothesis("cancellativity refuted: " + format_word(p, w->a) + " + " +
                              format_word(p, w->c) + " = " + format_word(p, w->b) + " + " +
                              format_word(p, w->c));
  }
  UnitInfo units = unit_info(p, opts.enumeration.units);
  if (!units.order)
    throw UnmetHypothesis("semipositivity could not be established (unit group unknown)");

  Ternary red = is_reduced(p, opts.reduced_cap, opts.enumeration.completion);
  if (red == Ternary::False)
    throw UnmetHypothesis("the binoid is not reduced; use the estimate mode");
  if (red == Ternary::Unknown)
    throw UnmetHypothesis("reducedness could not be established; use the estimate mode");

  SpectrumReport rep = spectrum(p, opts.spectrum_opts);
  const int d = rep.dimension;

  RewriteSystem sys = complete(p, opts.enumeration.completion);
  if (is_integral_quotient(sys)) return ehk_integral(p, n, d, opts);

  EHKResult total;
  total.dimension = d;
  total.value = 0;
  for (auto idx : rep.minimal_prime_indices) {
    if (rep.quotient_dimensions[idx] != d) continue;
    const auto& prime = rep.primes[idx];
    std::vector<Word> kill;
    for (auto g : prime.closure) {
      Word w(p.generator_count(), 0);
      w[g] = 1;
      kill.push_back(std::move(w));
    }
    Presentation qp = quotient_by_ideal(p, kill);
    RewriteSystem qsys = complete(qp, opts.enumeration.completion);
    IdealSpec qn;
    qn.primary_status = IdealSpec::Primary::Asserted;  // primary transfers to N/p
    for (const auto& g : n.generators) {
      Element e = qsys.normal_form(g);
      if (e.infinity) continue;
      if (std::find(qn.generators.begin(), qn.generators.end(), e.v) == qn.generators.end())
        qn.generators.push_back(std::move(e.v));
    }
    EHKResult branch = ehk_integral(qp, qn, d, opts);
    std::ostringstream os;
    os << "minimal prime <" << join_generators(p, prime.closure) << ">, dim " << d;
    total.trace.push_back({TraceStep::Kind::MinimalPrimeSplit, os.str(), branch.value});
    for (auto& step : branch.trace) total.trace.push_back(std::move(step));
    total.value += branch.value;
  }
  return total;
}

std::vector<std::int64_t> default_schedule() { return {8, 12, 16, 24, 32, 48, 64}; }

}  // namespace

std::string trace_kind_name(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::ZeroBinoid: return "zero-binoid";
    case TraceStep::Kind::SmashFactor: return "smash-factor";
    case TraceStep::Kind::MinimalPrimeSplit: return "minimal-prime";
    case TraceStep::Kind::TorsionFactor: return "torsion-factor";
    case TraceStep::Kind::ToricVolume: return "toric-volume";
    case TraceStep::Kind::EstimateFit: return "estimate-fit";
  }
  return "?";
}

EHKResult ehk(const Presentation& p, IdealSpec n, EhkOptions opts) {
  RewriteSystem sys = complete(p, opts.enumeration.completion);
  if (sys.collapsed()) {
    EHKResult r;
    r.value = 0;
    r.dimension = 0;
    r.trace.push_back({TraceStep::Kind::ZeroBinoid, "0 = inf, every count vanishes", Rat(0)});
    return r;
  }
  if (!opts.skip_primary_verification && n.primary_status != IdealSpec::Primary::Verified &&
      n.primary_status != IdealSpec::Primary::Asserted) {
    PrimaryVerification v = verify_primary(p, n, opts.enumeration);
    if (v.status == IdealSpec::Primary::Refuted)
      throw RefutedHypothesis("the ideal is not primary: " + v.detail);
    if (v.status != IdealSpec::Primary::Verified)
      throw UnmetHypothesis("primality could not be verified: " + v.detail);
  }

  auto comps = relation_components(p);
  if (comps.size() > 1) {
    // The ideal generators must split along components (always true for the
    // maximal ideal); otherwise fall through to the single pipeline.
    std::vector<std::vector<Word>> split(comps.size());
    bool splits = true;
    for (const auto& g : n.generators) {
      bool placed = false;
      for (std::size_t c = 0; c < comps.size() && !placed; ++c) {
        if (auto w = restrict_word(g, comps[c])) {
          if (!is_zero(*w)) {
            split[c].push_back(std::move(*w));
            placed = true;
          }
        }
      }
      if (!placed) splits = false;
    }
    if (splits) {
      EHKResult total;
      total.value = 1;
      total.dimension = 0;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        Presentation sub = restrict_to(p, comps[c]);
        IdealSpec part;
        part.generators = split[c];
        part.primary_status = IdealSpec::Primary::Asserted;  // verified on the whole
        EhkOptions sub_opts = opts;
        sub_opts.skip_primary_verification = true;
        EHKResult r = ehk_single_component(sub, part, sub_opts);
        std::ostringstream os;
        os << "factor <" << join_generators(p, comps[c]) << ">, dim " << r.dimension;
        total.trace.push_back({TraceStep::Kind::SmashFactor, os.str(), r.value});
        for (auto& step : r.trace) total.trace.push_back(std::move(step));
        total.value *= r.value;
        total.dimension += r.dimension;
      }
      return total;
    }
  }
  return ehk_single_component(p, std::move(n), opts);
}

EHKResult ehk_estimate(const Presentation& p, IdealSpec n, std::vector<std::int64_t> schedule,
                       EhkOptions opts) {
  if (schedule.empty()) schedule = default_schedule();
  RewriteSystem sys = complete(p, opts.enumeration.completion);
  if (sys.collapsed()) {
    EHKResult r;
    r.exact = false;
    r.dimension = 0;
    r.trace.push_back({TraceStep::Kind::ZeroBinoid, "0 = inf", Rat(0)});
    return r;
  }
  if (!opts.skip_primary_verification && n.primary_status != IdealSpec::Primary::Verified &&
      n.primary_status != IdealSpec::Primary::Asserted) {
    PrimaryVerification v = verify_primary(p, n, opts.enumeration);
    if (v.status == IdealSpec::Primary::Refuted)
      throw RefutedHypothesis("the ideal is not primary: " + v.detail);
    if (v.status != IdealSpec::Primary::Verified)
      throw UnmetHypothesis("primality could not be verified: " + v.detail);
  }
  SpectrumReport rep = spectrum(p, opts.spectrum_opts);
  const int d = rep.dimension;

  std::vector<std::pair<std::int64_t, std::uint64_t>> samples;
  bool truncated = false;
  for (auto q : schedule) {
    try {
      samples.emplace_back(q, hkf(p, n, NSetSpec::whole(), q, opts.enumeration).count);
    } catch (const EnumerationCapExceeded&) {
      truncated = true;
      break;
    }
  }
  if (samples.size() < 2)
    throw EnumerationCapExceeded(opts.enumeration.cap);

  // Least squares for hkf(q) = c q^d + c' q^(d-1).
  double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
  for (auto [q, cnt] : samples) {
    double x1 = std::pow(static_cast<double>(q), d);
    double x2 = d >= 1 ? std::pow(static_cast<double>(q), d - 1) : 0.0;
    s11 += x1 * x1;
    s12 += x1 * x2;
    s22 += x2 * x2;
    b1 += x1 * static_cast<double>(cnt);
    b2 += x2 * static_cast<double>(cnt);
  }
  double c = 0, c2 = 0;
  double det = s11 * s22 - s12 * s12;
  if (d >= 1 && std::abs(det) > 1e-12 * s11 * s22 + 1e-300) {
    c = (b1 * s22 - b2 * s12) / det;
    c2 = (s11 * b2 - s12 * b1) / det;
  } else {
    c = b1 / s11;
  }
  double max_rel_res = 0;
  for (auto [q, cnt] : samples) {
    double fit = c * std::pow(static_cast<double>(q), d) +
                 (d >= 1 ? c2 * std::pow(static_cast<double>(q), d - 1) : 0.0);
    double rel = std::abs(static_cast<double>(cnt) - fit) / std::pow(static_cast<double>(q), d);
    max_rel_res = std::max(max_rel_res, rel);
  }
  double qmin = static_cast<double>(samples.front().first);

  EHKResult r;
  r.exact = false;
  r.dimension = d;
  r.estimate = c;
  r.error_bound = std::abs(c2) / qmin + max_rel_res;
  std::ostringstream os;
  os << "fit over q in {";
  for (std::size_t i = 0; i < samples.size(); ++i) os << (i ? "," : "") << samples[i].first;
  os << "}, c' = " << c2 << (truncated ? " (schedule truncated by cap)" : "");
  r.trace.push_back({TraceStep::Kind::EstimateFit, os.str(), Rat(0)});
  return r;
}

EHKResult ehk_of_smash(const EHKResult& a, const EHKResult& b) {
  if (a.exact != b.exact)
    throw std::invalid_argument("cannot combine an exact value with an estimate");
  EHKResult r;
  r.exact = a.exact;
  r.dimension = a.dimension + b.dimension;
  if (a.exact) {
    r.value = a.value * b.value;
  } else {
    r.estimate = a.estimate * b.estimate;
    r.error_bound = std::abs(a.estimate) * b.error_bound + std::abs(b.estimate) * a.error_bound +
                    a.error_bound * b.error_bound;
  }
  r.trace = a.trace;
  r.trace.insert(r.trace.end(), b.trace.begin(), b.trace.end());
  return r;
}

}  // namespace binoid
