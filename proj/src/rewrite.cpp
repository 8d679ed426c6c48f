#include "binoid/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "binoid/errors.hpp"

namespace binoid {
namespace {

std::string show(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

// rhs == nullopt encodes infinity.
struct Equation {
  Word lhs;
  std::optional<Word> rhs;
};

struct Completer {
  std::size_t n;
  std::uint64_t budget;
  std::vector<RewriteRule> binomials;
  std::vector<Word> monomials;
  std::deque<Equation> queue;
  bool collapsed = false;
  std::uint64_t iterations = 0;

  Element reduce(Word w) const {
    if (collapsed) return Element::inf();
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& m : monomials)
        if (divides(m, w)) return Element::inf();
      for (const auto& r : binomials) {
        if (divides(r.lhs, w)) {
          for (std::size_t i = 0; i < n; ++i) w[i] += r.rhs[i] - r.lhs[i];
          changed = true;
          break;
        }
      }
    }
    return Element::of(std::move(w));
  }

  void add_monomial(Word m) {
    if (is_zero(m)) {
      collapsed = true;
      return;
    }
    for (const auto& existing : monomials)
      if (divides(existing, m)) return;
    std::erase_if(monomials, [&](const Word& e) { return divides(m, e); });
    // Binomial rules whose lhs is now reducible requeue so their right-hand
    // sides are forced into the inf-class as well.
    for (std::size_t i = 0; i < binomials.size();) {
      if (divides(m, binomials[i].lhs)) {
        queue.push_back({binomials[i].lhs, binomials[i].rhs});
        binomials.erase(binomials.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    for (const auto& r : binomials)
      if (supports_overlap(m, r.lhs)) {
        Word peak = word_max(m, r.lhs);
        Word via_r = word_add(word_sub(peak, r.lhs), r.rhs);
        queue.push_back({std::move(via_r), std::nullopt});
      }
    monomials.push_back(std::move(m));
  }

  void add_binomial(Word l, Word r) {
    for (std::size_t i = 0; i < binomials.size();) {
      if (divides(l, binomials[i].lhs) && binomials[i].lhs != l) {
        queue.push_back({binomials[i].lhs, binomials[i].rhs});
        binomials.erase(binomials.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    // Critical pairs only for genuinely overlapping supports: disjoint
    // redexes commute and their peaks are always joinable.
    for (const auto& other : binomials) {
      if (!supports_overlap(l, other.lhs)) continue;
      Word peak = word_max(l, other.lhs);
      Word via_new = word_add(word_sub(peak, l), r);
      Word via_other = word_add(word_sub(peak, other.lhs), other.rhs);
      queue.push_back({std::move(via_new), std::move(via_other)});
    }
    for (const auto& m : monomials) {
      if (!supports_overlap(l, m)) continue;
      Word peak = word_max(l, m);
      Word via_new = word_add(word_sub(peak, l), r);
      queue.push_back({std::move(via_new), std::nullopt});
    }
    binomials.push_back({std::move(l), std::move(r)});
  }

  void process(Equation eq) {
    Element a = reduce(std::move(eq.lhs));
    Element b = eq.rhs ? reduce(std::move(*eq.rhs)) : Element::inf();
    if (a == b) return;
    if (a.infinity || b.infinity) {
      add_monomial(a.infinity ? std::move(b.v) : std::move(a.v));
      return;
    }
    int c = compare_order(a.v, b.v);
    if (c == 0) return;
    if (c < 0) std::swap(a, b);
    add_binomial(std::move(a.v), std::move(b.v));
  }

  void run() {
    while (!queue.empty() && !collapsed) {
      if (++iterations > budget) {
        Equation& eq = queue.front();
        throw CompletionBudgetExceeded(show(eq.lhs) + " = " +
                                       (eq.rhs ? show(*eq.rhs) : std::string("inf")));
      }
      Equation eq = std::move(queue.front());
      queue.pop_front();
      process(std::move(eq));
    }
    if (collapsed) queue.clear();
  }

  // One pass of removing redundant rules and normalizing right-hand sides.
  // Returns true if anything changed; may enqueue follow-up equations.
  bool interreduce_pass() {
    if (collapsed) {
      binomials.clear();
      monomials.clear();
      return false;
    }
    bool changed = false;
    for (std::size_t i = 0; i < binomials.size();) {
      RewriteRule rule = std::move(binomials[i]);
      binomials.erase(binomials.begin() + static_cast<std::ptrdiff_t>(i));
      Element l = reduce(rule.lhs);
      if (l.infinity || l.v != rule.lhs) {
        // lhs reducible by the remaining rules: redundant in a confluent
        // system, but requeue to be safe about the congruence.
        queue.push_back({std::move(rule.lhs), std::move(rule.rhs)});
        changed = true;
        continue;
      }
      Element r = reduce(rule.rhs);
      if (r.infinity) {
        add_monomial(std::move(rule.lhs));
        changed = true;
        continue;
      }
      if (r.v != rule.rhs) changed = true;
      binomials.insert(binomials.begin() + static_cast<std::ptrdiff_t>(i),
                       {std::move(rule.lhs), std::move(r.v)});
      ++i;
      if (collapsed) return true;
    }
    return changed;
  }

  void finish() {
    run();
    while (!collapsed) {
      bool changed = interreduce_pass();
      run();
      if (!changed && queue.empty()) break;
    }
    std::sort(binomials.begin(), binomials.end(), [](const RewriteRule& a, const RewriteRule& b) {
      int c = compare_order(a.lhs, b.lhs);
      return c != 0 ? c < 0 : a.lhs < b.lhs;
    });
    std::sort(monomials.begin(), monomials.end(), [](const Word& a, const Word& b) {
      int c = compare_order(a, b);
      return c != 0 ? c < 0 : a < b;
    });
  }
};

}  // namespace

RewriteSystem complete(const Presentation& p, CompletionOptions opts) {
  validate(p);
  Completer c;
  c.n = p.generator_count();
  c.budget = opts.budget;
  for (const auto& w : p.infinity_relations) c.queue.push_back({w, std::nullopt});
  for (const auto& cong : p.congruences) c.queue.push_back({cong.lhs, cong.rhs});
  c.finish();

  RewriteSystem rs;
  rs.n_ = c.n;
  rs.collapsed_ = c.collapsed;
  rs.binomials_ = std::move(c.binomials);
  rs.monomials_ = std::move(c.monomials);
  rs.iterations_ = c.iterations;
  rs.base_ = p;
  return rs;
}

Element RewriteSystem::normal_form(Word w) const {
  if (collapsed_) return Element::inf();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& m : monomials_)
      if (divides(m, w)) return Element::inf();
    for (const auto& r : binomials_) {
      if (divides(r.lhs, w)) {
        for (std::size_t i = 0; i < n_; ++i) w[i] += r.rhs[i] - r.lhs[i];
        changed = true;
        break;
      }
    }
  }
  return Element::of(std::move(w));
}

Element RewriteSystem::normal_form_of(const Element& e) const {
  return e.infinity ? Element::inf() : normal_form(e.v);
}

Element RewriteSystem::add(const Element& a, const Element& b) const {
  if (a.infinity || b.infinity) return Element::inf();
  return normal_form(word_add(a.v, b.v));
}

bool RewriteSystem::ideal_membership(const std::vector<Word>& gens, const Element& x,
                                     CompletionOptions opts) const {
  if (x.infinity) return true;
  RewriteSystem q = complete(quotient_by_ideal(base_, gens), opts);
  return q.normal_form(x.v).infinity;
}

}  // namespace binoid
