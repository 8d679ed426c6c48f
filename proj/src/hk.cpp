#include "binoid/hk.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "binoid/errors.hpp"
#include "binoid/parallel.hpp"

namespace binoid {
namespace {

/// BFS over normal forms from the given sources, adding one generator per
/// step; inf prunes. Returns the sorted set of reached non-inf normal forms.
std::vector<Word> bfs_closure(const RewriteSystem& sys, const std::vector<Word>& sources,
                              std::size_t cap) {
  const std::size_t n = sys.generator_count();
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> frontier;
  for (const auto& s : sources) {
    Element e = sys.normal_form(s);
    if (e.infinity) continue;
    if (seen.insert(e.v).second) frontier.push_back(e.v);
  }
  while (!frontier.empty()) {
    if (seen.size() > cap) throw EnumerationCapExceeded(cap);
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t g = 0; g < n; ++g) {
      Word next = cur;
      next[g] += 1;
      Element e = sys.normal_form(std::move(next));
      if (e.infinity) continue;
      if (seen.insert(e.v).second) frontier.push_back(std::move(e.v));
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> kill_union(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

IdealSpec make_ideal(const Presentation& p, const std::vector<Word>& gens,
                     CompletionOptions opts) {
  RewriteSystem sys = complete(p, opts);
  IdealSpec ideal;
  for (const auto& g : gens) {
    Element e = sys.normal_form(g);
    if (e.infinity) continue;
    if (std::find(ideal.generators.begin(), ideal.generators.end(), e.v) ==
        ideal.generators.end())
      ideal.generators.push_back(std::move(e.v));
  }
  std::sort(ideal.generators.begin(), ideal.generators.end(), [](const Word& a, const Word& b) {
    int c = compare_order(a, b);
    return c != 0 ? c < 0 : a < b;
  });
  return ideal;
}

IdealSpec frobenius_sum(const IdealSpec& ideal, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("Frobenius sum needs q >= 1");
  IdealSpec out;
  out.primary_status = ideal.primary_status;
  for (const auto& g : ideal.generators) out.generators.push_back(word_scale(g, q));
  for (auto d : ideal.primary_witnesses) out.primary_witnesses.push_back(d * q);
  return out;
}

IdealSpec maximal_ideal(const Presentation& p, UnitSearchOptions opts) {
  UnitInfo info = unit_info(p, opts);
  if (!info.order) throw UnmetHypothesis("unit group could not be determined");
  RewriteSystem sys = complete(p, opts.completion);
  std::unordered_set<Word, WordHash> units(info.unit_elements.begin(),
                                           info.unit_elements.end());
  IdealSpec ideal;
  const std::size_t n = p.generator_count();
  for (std::size_t g = 0; g < n; ++g) {
    Word w(n, 0);
    w[g] = 1;
    Element e = sys.normal_form(std::move(w));
    if (e.infinity || units.count(e.v)) continue;
    if (std::find(ideal.generators.begin(), ideal.generators.end(), e.v) ==
        ideal.generators.end())
      ideal.generators.push_back(std::move(e.v));
  }
  return ideal;
}

std::vector<Word> residue_enumerate(const Presentation& p, const IdealSpec& j,
                                    EnumerationOptions opts) {
  RewriteSystem sys = complete(quotient_by_ideal(p, j.generators), opts.completion);
  return bfs_closure(sys, {zero_word(p.generator_count())}, opts.cap);
}

namespace {

std::uint64_t hkf_count(const Presentation& p, const IdealSpec& n, const NSetSpec& t,
                        std::int64_t q, const EnumerationOptions& opts);

std::uint64_t hkf_whole(const Presentation& p, const IdealSpec& n, std::int64_t q,
                        const EnumerationOptions& opts) {
  // Relation-disjoint components smash: counts multiply when the ideal's
  // generators split along them.
  auto comps = relation_components(p);
  if (comps.size() > 1) {
    std::vector<std::vector<Word>> split(comps.size());
    bool splits = true;
    for (const auto& g : n.generators) {
      bool placed = false;
      for (std::size_t c = 0; c < comps.size() && !placed; ++c) {
        if (auto w = restrict_word(g, comps[c])) {
          if (!is_zero(*w)) {
            split[c].push_back(std::move(*w));
            placed = true;
          } else if (is_zero(g)) {
            // 0 in the ideal: everything dies.
            return 0;
          }
        }
      }
      if (!placed) splits = false;
    }
    if (splits) {
      std::uint64_t total = 1;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        IdealSpec part;
        part.generators = split[c];
        std::uint64_t f = hkf_whole(restrict_to(p, comps[c]), part, q, opts);
        total *= f;
        if (total == 0) return 0;
      }
      return total;
    }
  }
  IdealSpec fq = frobenius_sum(n, q);
  RewriteSystem sys = complete(quotient_by_ideal(p, fq.generators), opts.completion);
  return bfs_closure(sys, {zero_word(p.generator_count())}, opts.cap).size();
}

std::uint64_t hkf_count(const Presentation& p, const IdealSpec& n, const NSetSpec& t,
                        std::int64_t q, const EnumerationOptions& opts) {
  IdealSpec fq = frobenius_sum(n, q);
  switch (t.kind) {
    case NSetSpec::Kind::WholeBinoid:
      return hkf_whole(p, n, q, opts);
    case NSetSpec::Kind::Quotient: {
      // (T/S)/(J+(T/S)) = T/(S u (J+T)) with T = N.
      RewriteSystem sys = complete(
          quotient_by_ideal(p, kill_union(fq.generators, t.ideal_generators)),
          opts.completion);
      return bfs_closure(sys, {zero_word(p.generator_count())}, opts.cap).size();
    }
    case NSetSpec::Kind::Ideal: {
      // Elements of I surviving modulo [q]n + I; the kill ideal is generated
      // by the pairwise sums of the two generating sets.
      std::vector<Word> kill;
      for (const auto& a : fq.generators)
        for (const auto& f : t.ideal_generators) kill.push_back(word_add(a, f));
      RewriteSystem sys = complete(quotient_by_ideal(p, kill), opts.completion);
      return bfs_closure(sys, t.ideal_generators, opts.cap).size();
    }
    case NSetSpec::Kind::PointedUnion: {
      std::uint64_t total = 0;
      for (const auto& part : t.parts) total += hkf_count(p, n, part, q, opts);
      return total;
    }
  }
  return 0;
}

}  // namespace

HKSample hkf(const Presentation& p, const IdealSpec& n, const NSetSpec& t, std::int64_t q,
             EnumerationOptions opts) {
  if (q < 1) throw std::invalid_argument("hkf needs q >= 1");
  if (n.primary_status == IdealSpec::Primary::Refuted)
    throw RefutedHypothesis("the ideal is not primary");
  return {q, hkf_count(p, n, t, q, opts)};
}

std::vector<HKRow> hkf_table(const Presentation& p, const IdealSpec& n, const NSetSpec& t,
                             const std::vector<std::int64_t>& qs, EnumerationOptions opts) {
  std::vector<HKRow> rows(qs.size());
  parallel_for_index(qs.size(), [&](std::size_t i) {
    rows[i].q = qs[i];
    try {
      rows[i].count = hkf(p, n, t, qs[i], opts).count;
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  });
  return rows;
}

bool verify_counting_identity(const Presentation& p, const IdealSpec& i, const IdealSpec& j,
                              EnumerationOptions opts, FourCounts* counts) {
  FourCounts c;
  // # N/J
  RewriteSystem sys_j = complete(quotient_by_ideal(p, j.generators), opts.completion);
  c.n_mod_j = bfs_closure(sys_j, {zero_word(p.generator_count())}, opts.cap).size();
  // # (N/I)/(J + N/I) = # N/(I u J)
  RewriteSystem sys_ij =
      complete(quotient_by_ideal(p, kill_union(i.generators, j.generators)), opts.completion);
  c.quotient_part = bfs_closure(sys_ij, {zero_word(p.generator_count())}, opts.cap).size();
  // # I/(J+I) with J+I = <a+b>
  std::vector<Word> kill;
  for (const auto& a : j.generators)
    for (const auto& b : i.generators) kill.push_back(word_add(a, b));
  RewriteSystem sys_kill = complete(quotient_by_ideal(p, kill), opts.completion);
  std::vector<Word> ideal_survivors = bfs_closure(sys_kill, i.generators, opts.cap);
  c.ideal_part = ideal_survivors.size();
  // # (I cap J)/(J+I): the survivors of I that lie in J.
  for (const auto& x : ideal_survivors)
    if (sys_j.normal_form(x).infinity) ++c.meet_part;
  if (counts) *counts = c;
  return c.n_mod_j + c.meet_part == c.ideal_part + c.quotient_part;
}

bool verify_smash_multiplicativity(const Presentation& a, const Presentation& b, std::int64_t q,
                                   EnumerationOptions opts) {
  Presentation ab = smash(a, b);
  IdealSpec ma = maximal_ideal(a, opts.units);
  IdealSpec mb = maximal_ideal(b, opts.units);
  IdealSpec mab = maximal_ideal(ab, opts.units);
  std::uint64_t lhs = hkf(ab, mab, NSetSpec::whole(), q, opts).count;
  std::uint64_t rhs = hkf(a, ma, NSetSpec::whole(), q, opts).count *
                      hkf(b, mb, NSetSpec::whole(), q, opts).count;
  return lhs == rhs;
}

PrimaryVerification verify_primary(const Presentation& p, IdealSpec& n,
                                   EnumerationOptions opts) {
  PrimaryVerification out;
  RewriteSystem base = complete(p, opts.completion);
  if (base.collapsed()) {
    // Zero binoid: the only ideal is {inf} = N_+.
    n.primary_status = IdealSpec::Primary::Verified;
    out.status = n.primary_status;
    return out;
  }
  RewriteSystem qsys = complete(quotient_by_ideal(p, n.generators), opts.completion);
  if (qsys.collapsed()) {
    n.primary_status = IdealSpec::Primary::Refuted;
    out.status = n.primary_status;
    out.detail = "ideal contains a unit (quotient collapses)";
    return out;
  }
  UnitInfo units = unit_info(p, opts.units);
  if (!units.order) {
    out.status = IdealSpec::Primary::Unverified;
    out.detail = "unit group unknown";
    return out;
  }
  std::vector<Word> elems;
  try {
    elems = bfs_closure(qsys, {zero_word(p.generator_count())}, opts.cap);
  } catch (const EnumerationCapExceeded&) {
    out.status = IdealSpec::Primary::Unverified;
    out.detail = "quotient enumeration hit the cap";
    return out;
  }
  out.quotient_size = elems.size();
  std::unordered_set<Word, WordHash> q_units;
  for (const auto& u : units.unit_elements) {
    Element e = qsys.normal_form(u);
    if (!e.infinity) q_units.insert(e.v);
  }
  const std::uint64_t nil_bound = elems.size() + 1;
  for (const auto& x : elems) {
    if (q_units.count(x)) continue;
    Element acc = Element::of(x);
    bool nilpotent = false;
    for (std::uint64_t k = 1; k < nil_bound && !nilpotent; ++k) {
      acc = qsys.add(acc, Element::of(x));
      if (acc.infinity) nilpotent = true;
    }
    if (!nilpotent) {
      n.primary_status = IdealSpec::Primary::Refuted;
      out.status = n.primary_status;
      out.detail = "non-nilpotent non-unit in the quotient";
      return out;
    }
  }
  // Witnesses d_i per non-unit generator.
  n.primary_witnesses.clear();
  const std::size_t ngen = p.generator_count();
  std::unordered_set<Word, WordHash> base_units(units.unit_elements.begin(),
                                                units.unit_elements.end());
  for (std::size_t g = 0; g < ngen; ++g) {
    Word w(ngen, 0);
    w[g] = 1;
    Element e = base.normal_form(w);
    if (e.infinity || base_units.count(e.v)) continue;
    std::int64_t d = 0;
    Element acc = Element::of(zero_word(ngen));
    for (std::uint64_t k = 1; k <= nil_bound + 1; ++k) {
      acc = qsys.add(acc, Element::of(w));
      if (acc.infinity) {
        d = static_cast<std::int64_t>(k);
        break;
      }
    }
    if (d == 0) {
      n.primary_status = IdealSpec::Primary::Refuted;
      out.status = n.primary_status;
      out.detail = "generator with no multiple in the ideal";
      return out;
    }
    n.primary_witnesses.push_back(d);
  }
  n.primary_status = IdealSpec::Primary::Verified;
  out.status = n.primary_status;
  return out;
}

}  // namespace binoid
