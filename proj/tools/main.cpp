// binoid-hk: Hilbert-Kunz functions and multiplicities of finitely generated
// commutative binoids from textual presentations.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "binoid/ehk.hpp"
#include "binoid/errors.hpp"
#include "binoid/hk.hpp"
#include "binoid/lattice.hpp"
#include "binoid/presentation.hpp"
#include "binoid/rewrite.hpp"
#include "binoid/spectrum.hpp"

using json = nlohmann::ordered_json;
using namespace binoid;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitRefuted = 4;
constexpr int kExitHypothesis = 5;

struct CommonInput {
  std::string spec;
  std::string file;
  std::size_t free_rank = 0;
  bool has_free = false;
};

struct Caps {
  std::uint64_t completion_budget = 100000;
  std::size_t enumeration_cap = 10000000;
  std::size_t subset_cap = 20;
};

std::string input_text(const CommonInput& in) {
  if (in.has_free) return "free " + std::to_string(in.free_rank);
  if (!in.spec.empty()) return in.spec;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw ParseError("cannot open input file '" + in.file + "'", 0, 0);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  throw ParseError("no input: pass --spec, --free, or an input file", 0, 0);
}

Presentation load(const CommonInput& in) { return parse_presentation(input_text(in)); }

EnumerationOptions enum_options(const Caps& caps) {
  EnumerationOptions o;
  o.cap = caps.enumeration_cap;
  o.completion.budget = caps.completion_budget;
  o.units.completion.budget = caps.completion_budget;
  return o;
}

std::vector<std::int64_t> parse_q_list(const std::string& text) {
  std::vector<std::int64_t> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots != std::string::npos) {
      std::int64_t lo = std::stoll(item.substr(0, dots));
      std::int64_t hi = std::stoll(item.substr(dots + 2));
      for (std::int64_t q = lo; q <= hi; ++q) qs.push_back(q);
    } else if (!item.empty()) {
      qs.push_back(std::stoll(item));
    }
  }
  for (auto q : qs)
    if (q < 1) throw ParseError("q values must be >= 1", 0, 0);
  if (qs.empty()) throw ParseError("empty q list", 0, 0);
  return qs;
}

std::vector<Word> parse_word_list(const Presentation& p, const std::string& text) {
  std::vector<Word> words;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    words.push_back(parse_word(p, item));
  }
  return words;
}

json word_json(const Presentation& p, const Word& w) { return format_word(p, w); }

json trace_json(const std::vector<TraceStep>& trace) {
  json arr = json::array();
  for (const auto& step : trace) {
    json s;
    s["step"] = trace_kind_name(step.kind);
    s["detail"] = step.detail;
    if (step.kind != TraceStep::Kind::EstimateFit && step.kind != TraceStep::Kind::ZeroBinoid) {
      s["value"] = {{"num", numerator(step.value).str()}, {"den", denominator(step.value).str()}};
    }
    arr.push_back(std::move(s));
  }
  return arr;
}

int run_info(const CommonInput& in, const Caps& caps, const std::string& format) {
  Presentation p = load(in);
  SpectrumOptions sopts;
  sopts.subset_cap = caps.subset_cap;
  sopts.completion.budget = caps.completion_budget;
  SpectrumReport rep = spectrum(p, sopts);
  RewriteSystem sys = complete(p, sopts.completion);
  UnitSearchOptions uopts;
  uopts.completion.budget = caps.completion_budget;
  UnitInfo units = unit_info(p, uopts);
  Ternary red = is_reduced(p, 64, sopts.completion);

  json out;
  out["input"] = print_presentation(p);
  out["generators"] = p.generators;
  out["dimension"] = rep.dimension;
  json primes = json::array();
  for (const auto& prime : rep.primes) {
    json names = json::array();
    for (auto g : prime.closure) names.push_back(p.generators[g]);
    primes.push_back(std::move(names));
  }
  out["primes"] = primes;
  json minimal = json::array();
  for (auto i : rep.minimal_prime_indices) {
    json names = json::array();
    for (auto g : rep.primes[i].closure) names.push_back(p.generators[g]);
    minimal.push_back(std::move(names));
  }
  out["minimal_primes"] = minimal;
  out["integral"] = is_integral_quotient(sys);
  out["reduced"] = red == Ternary::True ? "true" : (red == Ternary::False ? "false" : "unknown");
  if (units.order)
    out["unit_group_order"] = *units.order;
  else
    out["unit_group_order"] = "unknown";
  out["zero_binoid"] = sys.collapsed();

  if (format == "text") {
    std::cout << "generators: ";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      std::cout << (i ? "," : "") << p.generators[i];
    std::cout << "\ndimension: " << rep.dimension << "\nprimes: " << primes.size()
              << "\nminimal primes: " << minimal.size() << "\nintegral: "
              << (out["integral"].get<bool>() ? "yes" : "no")
              << "\nreduced: " << out["reduced"].get<std::string>() << "\nunit group order: ";
    if (units.order)
      std::cout << *units.order;
    else
      std::cout << "unknown";
    std::cout << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_nf(const CommonInput& in, const Caps& caps, const std::string& word_text) {
  Presentation p = load(in);
  CompletionOptions copts{caps.completion_budget};
  RewriteSystem sys = complete(p, copts);
  Element e = sys.normal_form(parse_word(p, word_text));
  std::cout << (e.infinity ? "inf" : format_word(p, e.v)) << "\n";
  return kExitOk;
}

int run_member(const CommonInput& in, const Caps& caps, const std::string& gens_text,
               const std::string& word_text) {
  Presentation p = load(in);
  CompletionOptions copts{caps.completion_budget};
  RewriteSystem sys = complete(p, copts);
  std::vector<Word> gens = parse_word_list(p, gens_text);
  Element x = sys.normal_form(parse_word(p, word_text));
  bool member = sys.ideal_membership(gens, x, copts);
  std::cout << (member ? "true" : "false") << "\n";
  return member ? kExitOk : 1;
}

IdealSpec resolve_ideal(const Presentation& p, const std::string& ideal_text, const Caps& caps,
                        bool assert_primary, std::string* rendered = nullptr) {
  EnumerationOptions eopts = enum_options(caps);
  IdealSpec n;
  if (ideal_text.empty()) {
    n = maximal_ideal(p, eopts.units);
  } else {
    n = make_ideal(p, parse_word_list(p, ideal_text), eopts.completion);
  }
  if (rendered) {
    std::ostringstream os;
    for (std::size_t i = 0; i < n.generators.size(); ++i)
      os << (i ? ";" : "") << format_word(p, n.generators[i]);
    *rendered = os.str();
  }
  if (assert_primary) {
    n.primary_status = IdealSpec::Primary::Asserted;
    return n;
  }
  PrimaryVerification v = verify_primary(p, n, eopts);
  if (v.status == IdealSpec::Primary::Refuted)
    throw RefutedHypothesis("ideal is not primary: " + v.detail);
  if (v.status != IdealSpec::Primary::Verified)
    throw UnmetHypothesis("primality could not be verified: " + v.detail);
  return n;
}

int run_hkf(const CommonInput& in, const Caps& caps, const std::string& q_text,
            const std::string& ideal_text, bool assert_primary, const std::string& format) {
  Presentation p = load(in);
  std::vector<std::int64_t> qs = parse_q_list(q_text);
  IdealSpec n = resolve_ideal(p, ideal_text, caps, assert_primary);
  std::vector<HKRow> rows = hkf_table(p, n, NSetSpec::whole(), qs, enum_options(caps));

  bool capped = false;
  for (const auto& r : rows)
    if (!r.count) capped = true;

  if (format == "csv" || format == "text") {
    std::cout << "q,count\n";
    for (const auto& r : rows) {
      std::cout << r.q << ",";
      if (r.count)
        std::cout << *r.count << "\n";
      else
        std::cout << "error:" << r.error << "\n";
    }
  } else {
    json out;
    out["input"] = print_presentation(p);
    out["generators"] = p.generators;
    json table = json::array();
    for (const auto& r : rows) {
      json row;
      row["q"] = r.q;
      if (r.count)
        row["count"] = *r.count;
      else
        row["error"] = r.error;
      table.push_back(std::move(row));
    }
    out["hkf"] = table;
    std::cout << out.dump(2) << "\n";
  }
  return capped ? kExitResource : kExitOk;
}

int run_ehk(const CommonInput& in, const Caps& caps, const std::string& ideal_text,
            bool assert_primary, bool estimate_mode, const std::string& format) {
  Presentation p = load(in);
  std::string ideal_rendered;
  IdealSpec n = resolve_ideal(p, ideal_text, caps, assert_primary, &ideal_rendered);
  EhkOptions opts;
  opts.enumeration = enum_options(caps);
  opts.spectrum_opts.subset_cap = caps.subset_cap;
  opts.spectrum_opts.completion.budget = caps.completion_budget;
  opts.skip_primary_verification = true;  // resolved above

  EHKResult r = estimate_mode ? ehk_estimate(p, n, {}, opts) : ehk(p, std::move(n), opts);

  if (format == "text") {
    if (r.exact)
      std::cout << numerator(r.value) << "/" << denominator(r.value) << "\n";
    else
      std::cout << r.estimate << " +- " << r.error_bound << "\n";
    for (const auto& step : r.trace) {
      std::cout << "  [" << trace_kind_name(step.kind) << "] " << step.detail;
      if (step.kind == TraceStep::Kind::TorsionFactor ||
          step.kind == TraceStep::Kind::ToricVolume ||
          step.kind == TraceStep::Kind::MinimalPrimeSplit ||
          step.kind == TraceStep::Kind::SmashFactor)
        std::cout << " -> " << numerator(step.value) << "/" << denominator(step.value);
      std::cout << "\n";
    }
  } else {
    json out;
    out["input"] = print_presentation(p);
    out["generators"] = p.generators;
    out["ideal"] = ideal_rendered;
    out["dimension"] = r.dimension;
    if (r.exact)
      out["ehk"] = {{"num", numerator(r.value).str()}, {"den", denominator(r.value).str()}};
    else
      out["ehk"] = {{"estimate", r.estimate}, {"error", r.error_bound}};
    out["trace"] = trace_json(r.trace);
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_export_ring(const CommonInput& in) {
  Presentation p = load(in);
  std::cout << "vars ";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    std::cout << (i ? "," : "") << p.generators[i];
  std::cout << "\n";
  auto monomial_string = [&](const Word& w) -> std::string {
    if (is_zero(w)) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t g = 0; g < w.size(); ++g) {
      if (w[g] == 0) continue;
      if (!first) os << "*";
      os << p.generators[g];
      if (w[g] > 1) os << "^" << w[g];
      first = false;
    }
    return os.str();
  };
  for (const auto& c : p.congruences)
    std::cout << "binomial " << monomial_string(c.lhs) << " - " << monomial_string(c.rhs) << "\n";
  for (const auto& w : p.infinity_relations)
    std::cout << "monomial " << monomial_string(w) << "\n";
  return kExitOk;
}

int run_verify(const Caps& caps, std::uint64_t seed, std::size_t trials) {
  // Seeded random small presentations; the three paper identities.
  std::mt19937_64 rng(seed);
  EnumerationOptions eopts = enum_options(caps);
  auto rand_presentation = [&](bool allow_units) {
    for (;;) {
      std::size_t ngen = 1 + rng() % 3;
      Presentation p = free_binoid(ngen);
      std::size_t nrel = rng() % 3;
      for (std::size_t r = 0; r < nrel; ++r) {
        Word lhs(ngen, 0), rhs(ngen, 0);
        for (std::size_t g = 0; g < ngen; ++g) {
          lhs[g] = rng() % 3;
          rhs[g] = rng() % 3;
        }
        if (lhs == rhs || (is_zero(lhs) && is_zero(rhs))) continue;
        if (rng() % 4 == 0)
          p.infinity_relations.push_back(lhs);
        else
          p.congruences.push_back({lhs, rhs});
      }
      if (allow_units && rng() % 3 == 0)
        p = smash(p, group_binoid(2 + static_cast<std::int64_t>(rng() % 3)));
      try {
        RewriteSystem sys = complete(p, eopts.completion);
        if (sys.collapsed()) continue;
        if (!unit_group_order(p, eopts.units)) continue;
        IdealSpec m = maximal_ideal(p, eopts.units);
        PrimaryVerification v = verify_primary(p, m, eopts);
        if (v.status != IdealSpec::Primary::Verified) continue;
        if (v.quotient_size > 512) continue;
        return p;
      } catch (const std::exception&) {
        continue;
      }
    }
  };

  std::size_t failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    Presentation a = rand_presentation(true);
    Presentation b = rand_presentation(true);
    std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 5);
    bool ok = false;
    try {
      ok = verify_smash_multiplicativity(a, b, q, eopts);
    } catch (const std::exception&) {
    }
    report("smash-multiplicativity q=" + std::to_string(q), ok);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Presentation p = rand_presentation(false);
    IdealSpec j = maximal_ideal(p, eopts.units);
    verify_primary(p, j, eopts);
    j = frobenius_sum(j, 1 + static_cast<std::int64_t>(rng() % 3));
    std::vector<Word> igens;
    std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) {
      Word w(p.generator_count(), 0);
      for (std::size_t g = 0; g < p.generator_count(); ++g) w[g] = rng() % 3;
      if (!is_zero(w)) igens.push_back(std::move(w));
    }
    IdealSpec ideal = make_ideal(p, igens, eopts.completion);
    bool ok = false;
    try {
      ok = verify_counting_identity(p, ideal, j, eopts);
    } catch (const std::exception&) {
    }
    report("counting-identity", ok);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Presentation a = rand_presentation(true);
    Presentation b = rand_presentation(true);
    bool ok = false;
    try {
      SpectrumOptions sopts;
      sopts.completion.budget = caps.completion_budget;
      ok = spectrum(smash(a, b), sopts).dimension ==
           spectrum(a, sopts).dimension + spectrum(b, sopts).dimension;
    } catch (const std::exception&) {
    }
    report("dimension-additivity", ok);
  }
  std::cout << (failures == 0 ? "all checks passed" : "failures: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz functions and multiplicities of commutative binoids"};
  app.require_subcommand(1);

  CommonInput in;
  Caps caps;
  std::string format = "json";
  bool assert_primary = false;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("file", in.file, "presentation file in the DSL");
    cmd->add_option("--spec", in.spec, "inline presentation in the DSL");
    auto* fr = cmd->add_option("--free", in.free_rank, "use the free binoid of this rank");
    fr->each([&](const std::string&) { in.has_free = true; });
    cmd->add_option("--completion-budget", caps.completion_budget, "critical pair budget");
    cmd->add_option("--enum-cap", caps.enumeration_cap, "residue enumeration cap");
    cmd->add_option("--subset-cap", caps.subset_cap, "spectrum subset cap");
    if (with_format)
      cmd->add_option("--format", format, "output format: json|csv|text")
          ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* cmd_info = app.add_subcommand("info", "spectrum, dimension, predicates");
  add_common(cmd_info);

  std::string word_text;
  auto* cmd_nf = app.add_subcommand("nf", "normal form of a word");
  add_common(cmd_nf, false);
  cmd_nf->add_option("--word", word_text, "word in additive notation")->required();

  std::string gens_text;
  auto* cmd_member = app.add_subcommand("member", "ideal membership of a word");
  add_common(cmd_member, false);
  cmd_member->add_option("--gens", gens_text, "ideal generators, ';'-separated")->required();
  cmd_member->add_option("--word", word_text, "word to test")->required();

  std::string q_text = "1..10";
  std::string ideal_text;
  auto* cmd_hkf = app.add_subcommand("hkf", "Hilbert-Kunz function values");
  add_common(cmd_hkf);
  cmd_hkf->add_option("--q", q_text, "q values: list and ranges, e.g. 1..5,8");
  cmd_hkf->add_option("--ideal", ideal_text, "primary ideal generators, ';'-separated");
  cmd_hkf->add_flag("--assert-primary", assert_primary, "skip primary verification");

  bool estimate_mode = false;
  auto* cmd_ehk = app.add_subcommand("ehk", "Hilbert-Kunz multiplicity");
  add_common(cmd_ehk);
  cmd_ehk->add_option("--ideal", ideal_text, "primary ideal generators, ';'-separated");
  cmd_ehk->add_flag("--assert-primary", assert_primary, "skip primary verification");
  cmd_ehk->add_flag("--estimate", estimate_mode, "numeric limit fit instead of exact value");

  std::uint64_t seed = 20240811;
  std::size_t trials = 20;
  auto* cmd_verify = app.add_subcommand("verify", "run the identity property checks");
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_option("--trials", trials, "trials per identity");
  cmd_verify->add_option("--completion-budget", caps.completion_budget, "critical pair budget");
  cmd_verify->add_option("--enum-cap", caps.enumeration_cap, "residue enumeration cap");

  auto* cmd_export = app.add_subcommand("export-ring", "polynomial ideal for external systems");
  add_common(cmd_export, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_info->parsed()) return run_info(in, caps, format);
    if (cmd_nf->parsed()) return run_nf(in, caps, word_text);
    if (cmd_member->parsed()) return run_member(in, caps, gens_text, word_text);
    if (cmd_hkf->parsed()) return run_hkf(in, caps, q_text, ideal_text, assert_primary, format);
    if (cmd_ehk->parsed())
      return run_ehk(in, caps, ideal_text, assert_primary, estimate_mode, format);
    if (cmd_verify->parsed()) return run_verify(caps, seed, trials);
    if (cmd_export->parsed()) return run_export_ring(in);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CompletionBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const SubsetCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (try --estimate)\n";
    return kExitResource;
  } catch (const UnboundedRegion& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const RefutedHypothesis& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const UnmetHypothesis& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
