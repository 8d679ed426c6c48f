#include <doctest.h>

#include <cmath>

#include "binoid/ehk.hpp"
#include "binoid/errors.hpp"
#include "binoid/presentation.hpp"

using namespace binoid;

namespace {

EHKResult ehk_of(const std::string& spec) {
  Presentation p = parse_presentation(spec);
  return ehk(p, maximal_ideal(p));
}

bool trace_has(const EHKResult& r, TraceStep::Kind kind, const Rat& value) {
  for (const auto& s : r.trace)
    if (s.kind == kind && s.value == value) return true;
  return false;
}

double to_double(const Rat& r) {
  return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

}  // namespace

TEST_CASE("free binoids have multiplicity one") {
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u}) {
    EHKResult r = ehk_of("free " + std::to_string(n));
    CHECK(r.exact);
    CHECK(r.value == Rat(1));
    CHECK(r.dimension == static_cast<int>(n));
  }
}

TEST_CASE("stanley reisner multiplicity counts maximal facets") {
  struct Case {
    const char* spec;
    int ehk_value;
    int dim;
  };
  const Case cases[] = {
      {"sr a,b,c ; facet a,b ; facet b,c", 2, 2},
      {"sr a,b,c,d ; facet a,b,c ; facet b,c,d", 2, 3},
      {"sr a,b,c,d,e ; facet a,b,c ; facet d,e", 1, 3},
      {"sr a,b,c,d ; facet a,b ; facet c,d", 2, 2},
      {"sr a,b,c ; facet a,b,c", 1, 3},
  };
  for (const auto& c : cases) {
    EHKResult r = ehk_of(c.spec);
    CHECK(r.exact);
    CHECK(r.value == Rat(c.ehk_value));
    CHECK(r.dimension == c.dim);
  }
}

TEST_CASE("torsion family ax = ay") {
  for (int a : {2, 3, 5}) {
    EHKResult r = ehk_of("binoid x,y | " + std::to_string(a) + "x = " + std::to_string(a) + "y");
    CHECK(r.exact);
    CHECK(r.value == Rat(a));
    CHECK(r.dimension == 1);
    CHECK(trace_has(r, TraceStep::Kind::TorsionFactor, Rat(a)));
    CHECK(trace_has(r, TraceStep::Kind::ToricVolume, Rat(1)));
  }
}

TEST_CASE("numerical submonoid of (N x Z/2)") {
  EHKResult r = ehk_of("binoid a,b | 6a = 4b");
  CHECK(r.exact);
  CHECK(r.value == Rat(4));
  CHECK(r.dimension == 1);
  CHECK(trace_has(r, TraceStep::Kind::TorsionFactor, Rat(2)));
  CHECK(trace_has(r, TraceStep::Kind::ToricVolume, Rat(2)));
}

TEST_CASE("the 4X+12Y=16Z example") {
  EHKResult r = ehk_of("binoid X,Y,Z | 4X+12Y = 16Z");
  CHECK(r.exact);
  CHECK(r.value == Rat(13));
  CHECK(r.dimension == 2);
  CHECK(trace_has(r, TraceStep::Kind::TorsionFactor, Rat(4)));
  CHECK(trace_has(r, TraceStep::Kind::ToricVolume, Rat(13, 4)));
}

TEST_CASE("smash inputs factor first") {
  EHKResult r = ehk_of("smash { binoid x,y | 2x = 2y } { free 1 }");
  CHECK(r.exact);
  CHECK(r.value == Rat(2));
  CHECK(r.dimension == 2);
  bool has_factor = false;
  for (const auto& s : r.trace)
    if (s.kind == TraceStep::Kind::SmashFactor) has_factor = true;
  CHECK(has_factor);

  EHKResult g = ehk_of("smash { group 3 } { free 2 }");
  CHECK(g.value == Rat(3));
  CHECK(g.dimension == 2);
}

TEST_CASE("zero binoid") {
  Presentation z = quotient_by_ideal(free_binoid(1), {Word{0}});
  IdealSpec n;
  EHKResult r = ehk(z, n);
  CHECK(r.exact);
  CHECK(r.value == Rat(0));
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace[0].kind == TraceStep::Kind::ZeroBinoid);
}

TEST_CASE("hypothesis violations are reported, not computed around") {
  Presentation nonreduced = parse_presentation("binoid x | 2x = inf");
  CHECK_THROWS_AS(ehk(nonreduced, maximal_ideal(nonreduced)), UnmetHypothesis);

  // x+y = x refutes cancellativity; the unit group is inconclusive there, so
  // pass the ideal explicitly and assert primality to reach the check.
  Presentation noncancellative = parse_presentation("binoid x,y | x+y = x");
  IdealSpec asserted = make_ideal(noncancellative, {Word{1, 0}, Word{0, 1}});
  asserted.primary_status = IdealSpec::Primary::Asserted;
  CHECK_THROWS_AS(ehk(noncancellative, asserted), RefutedHypothesis);

  Presentation free2 = free_binoid(2);
  IdealSpec bad = make_ideal(free2, {Word{1, 0}});
  CHECK_THROWS_AS(ehk(free2, bad), RefutedHypothesis);
}

TEST_CASE("minimal prime additivity is re-derivable from the parts") {
  Presentation path = parse_presentation("sr a,b,c ; facet a,b ; facet b,c");
  SpectrumReport rep = spectrum(path);
  Rat total = 0;
  for (auto i : rep.minimal_prime_indices) {
    if (rep.quotient_dimensions[i] != rep.dimension) continue;
    std::vector<Word> kill;
    for (auto g : rep.primes[i].closure) {
      Word w(3, 0);
      w[g] = 1;
      kill.push_back(std::move(w));
    }
    Presentation q = quotient_by_ideal(path, kill);
    IdealSpec m = make_ideal(q, maximal_ideal(path).generators);
    m.primary_status = IdealSpec::Primary::Asserted;
    total += ehk(q, m).value;
  }
  CHECK(total == ehk_of("sr a,b,c ; facet a,b ; facet b,c").value);
}

TEST_CASE("torsion pipeline step is re-derivable from its parts") {
  for (const char* spec : {"binoid x,y | 3x = 3y", "binoid a,b | 6a = 4b",
                           "binoid X,Y,Z | 4X+12Y = 16Z"}) {
    Presentation p = parse_presentation(spec);
    TorsionFreefication tf = torsion_freefication(p);
    std::vector<std::vector<std::int64_t>> ideal_gens;
    for (const auto& g : maximal_ideal(p).generators) {
      auto img = tf.lattice.word_image(g);
      REQUIRE(img.has_value());
      ideal_gens.push_back(img->free_part);
    }
    Rat expected = Rat(tf.torsion_order) * toric_ehk(tf.monoid_generators, ideal_gens);
    CHECK(ehk(p, maximal_ideal(p)).value == expected);
  }
}

TEST_CASE("oracle agreement: hkf(q)/q^d approaches the exact value") {
  struct Case {
    const char* spec;
  };
  for (const char* spec :
       {"free 2", "binoid x,y | 2x = 2y", "binoid X,Y,Z | 4X+12Y = 16Z",
        "sr a,b,c ; facet a,b ; facet b,c"}) {
    Presentation p = parse_presentation(spec);
    IdealSpec m = maximal_ideal(p);
    EHKResult r = ehk(p, m);
    const int d = r.dimension;
    double e = to_double(r.value);
    auto err_at = [&](std::int64_t q) {
      double h = static_cast<double>(hkf(p, m, NSetSpec::whole(), q).count);
      return std::abs(h / std::pow(static_cast<double>(q), d) - e);
    };
    double c_fit = std::max(err_at(4) * 4, err_at(8) * 8);
    CHECK(err_at(16) <= c_fit / 16 + 1e-9);
  }
}

TEST_CASE("estimate mode approximates the exact values") {
  for (const char* spec : {"free 2", "binoid x,y | 2x = 2y",
                           "sr a,b,c,d ; facet a,b ; facet c,d"}) {
    Presentation p = parse_presentation(spec);
    IdealSpec m = maximal_ideal(p);
    EHKResult exact = ehk(p, m);
    IdealSpec m2 = maximal_ideal(p);
    EHKResult est = ehk_estimate(p, m2, {8, 12, 16, 24, 32});
    CHECK_FALSE(est.exact);
    CHECK(est.dimension == exact.dimension);
    double e = to_double(exact.value);
    CHECK(std::abs(est.estimate - e) <= 0.05 * e);
  }
}

TEST_CASE("estimate mode works where exactness is refused") {
  Presentation nonreduced = parse_presentation("binoid x | 2x = inf");
  IdealSpec m = maximal_ideal(nonreduced);
  EHKResult est = ehk_estimate(nonreduced, m, {2, 3, 4, 5});
  CHECK_FALSE(est.exact);
  CHECK(est.dimension == 0);
  CHECK(est.estimate == doctest::Approx(2.0));
}

TEST_CASE("ehk_of_smash combines results") {
  EHKResult one = ehk_of("free 1");
  EHKResult tor = ehk_of("binoid x,y | 2x = 2y");
  EHKResult prod = ehk_of_smash(one, tor);
  CHECK(prod.value == Rat(2));
  CHECK(prod.dimension == 2);

  Presentation p = parse_presentation("binoid x,y | 2x = 2y");
  IdealSpec m1 = maximal_ideal(p);
  IdealSpec m2 = maximal_ideal(p);
  EHKResult e1 = ehk_estimate(p, m1, {8, 12, 16});
  EHKResult e2 = ehk_estimate(p, m2, {8, 12, 16});
  EHKResult eprod = ehk_of_smash(e1, e2);
  CHECK_FALSE(eprod.exact);
  CHECK(eprod.estimate == doctest::Approx(4.0).epsilon(0.05));

  CHECK_THROWS_AS(ehk_of_smash(one, e1), std::invalid_argument);
}
