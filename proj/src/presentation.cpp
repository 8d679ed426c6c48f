#include "binoid/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "binoid/errors.hpp"

namespace binoid {
namespace {

struct Token {
  enum class Kind { Int, Ident, Symbol, End };
  Kind kind;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, current_.line, current_.column);
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= src_.size()) {
      current_.kind = Token::Kind::End;
      current_.text = "<end of input>";
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num.push_back(src_[pos_]);
        bump();
      }
      current_.kind = Token::Kind::Int;
      current_.text = num;
      current_.value = std::stoll(num);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '\'')) {
        id.push_back(src_[pos_]);
        bump();
      }
      current_.kind = Token::Kind::Ident;
      current_.text = id;
      return;
    }
    if (std::string("|,;+={}").find(c) != std::string::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.text = std::string(1, c);
      bump();
      return;
    }
    if (c == '-')
      throw ParseError("negative exponents are not allowed", line_, column_);
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Presentation parse_top() {
    if (lex_.peek().kind == Token::Kind::End)
      lex_.fail("empty input");
    Presentation p = parse_statement();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.fail("trailing input after statement");
    validate(p);
    return p;
  }

  Presentation parse_statement() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Ident)
      lex_.fail("expected a statement (free, group, binoid, smash, sr)");
    if (t.text == "free") return parse_free();
    if (t.text == "group") return parse_group();
    if (t.text == "binoid") return parse_binoid();
    if (t.text == "smash") return parse_smash();
    if (t.text == "sr") return parse_sr();
    lex_.fail("unknown statement '" + t.text + "'");
  }

 private:
  Token expect_symbol(const std::string& s) {
    if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != s)
      lex_.fail("expected '" + s + "', found '" + lex_.peek().text + "'");
    return lex_.next();
  }

  std::int64_t expect_int() {
    if (lex_.peek().kind != Token::Kind::Int)
      lex_.fail("expected an integer, found '" + lex_.peek().text + "'");
    return lex_.next().value;
  }

  std::string expect_ident() {
    if (lex_.peek().kind != Token::Kind::Ident)
      lex_.fail("expected an identifier, found '" + lex_.peek().text + "'");
    return lex_.next().text;
  }

  Presentation parse_free() {
    lex_.next();
    std::int64_t n = expect_int();
    if (n < 0) lex_.fail("free requires a non-negative count");
    return free_binoid(static_cast<std::size_t>(n));
  }

  Presentation parse_group() {
    lex_.next();
    const Token k = lex_.peek();
    std::int64_t v = expect_int();
    if (v < 2) throw ParseError("group order must be at least 2", k.line, k.column);
    return group_binoid(v);
  }

  Presentation parse_binoid() {
    lex_.next();
    Presentation p;
    p.generators.push_back(expect_ident());
    while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",") {
      lex_.next();
      p.generators.push_back(expect_ident());
    }
    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "|") {
      lex_.next();
      parse_relation(p);
      while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ";") {
        lex_.next();
        parse_relation(p);
      }
    }
    return p;
  }

  void parse_relation(Presentation& p) {
    Word lhs = parse_word_into(p);
    expect_symbol("=");
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "inf") {
      lex_.next();
      p.infinity_relations.push_back(std::move(lhs));
      return;
    }
    Word rhs = parse_word_into(p);
    p.congruences.push_back({std::move(lhs), std::move(rhs)});
  }

  Word parse_word_into(const Presentation& p) {
    Word w(p.generator_count(), 0);
    // "0" denotes the neutral element.
    if (lex_.peek().kind == Token::Kind::Int && lex_.peek().value == 0) {
      lex_.next();
      return w;
    }
    parse_term(p, w);
    while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "+") {
      lex_.next();
      parse_term(p, w);
    }
    return w;
  }

  void parse_term(const Presentation& p, Word& w) {
    std::int64_t coeff = 1;
    if (lex_.peek().kind == Token::Kind::Int) coeff = lex_.next().value;
    const Token id = lex_.peek();
    std::string name = expect_ident();
    auto it = std::find(p.generators.begin(), p.generators.end(), name);
    if (it == p.generators.end())
      throw ParseError("undeclared generator '" + name + "'", id.line, id.column);
    w[static_cast<std::size_t>(it - p.generators.begin())] += coeff;
  }

  Presentation parse_smash() {
    lex_.next();
    expect_symbol("{");
    Presentation acc = parse_statement();
    expect_symbol("}");
    expect_symbol("{");
    acc = smash(acc, parse_statement());
    expect_symbol("}");
    while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "{") {
      lex_.next();
      acc = smash(acc, parse_statement());
      expect_symbol("}");
    }
    return acc;
  }

  Presentation parse_sr() {
    lex_.next();
    SimplicialComplex c;
    c.vertices.push_back(expect_ident());
    while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",") {
      lex_.next();
      c.vertices.push_back(expect_ident());
    }
    while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ";") {
      lex_.next();
      const Token kw = lex_.peek();
      if (expect_ident() != "facet")
        throw ParseError("expected 'facet'", kw.line, kw.column);
      std::vector<std::size_t> facet;
      facet.push_back(vertex_index(c));
      while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",") {
        lex_.next();
        facet.push_back(vertex_index(c));
      }
      std::sort(facet.begin(), facet.end());
      facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
      c.facets.push_back(std::move(facet));
    }
    if (c.facets.empty()) lex_.fail("sr statement needs at least one facet");
    return stanley_reisner(c);
  }

  std::size_t vertex_index(const SimplicialComplex& c) {
    const Token id = lex_.peek();
    std::string name = expect_ident();
    auto it = std::find(c.vertices.begin(), c.vertices.end(), name);
    if (it == c.vertices.end())
      throw ParseError("undeclared vertex '" + name + "'", id.line, id.column);
    return static_cast<std::size_t>(it - c.vertices.begin());
  }

  Lexer lex_;
};

std::string default_free_name(std::size_t i) { return "x" + std::to_string(i + 1); }

}  // namespace

void validate(const Presentation& p) {
  std::set<std::string> seen;
  for (const auto& g : p.generators) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(g).second)
      throw std::invalid_argument("duplicate generator name '" + g + "'");
  }
  auto check_word = [&](const Word& w) {
    if (w.size() != p.generator_count())
      throw std::invalid_argument("word length does not match generator count");
    for (auto e : w)
      if (e < 0) throw std::invalid_argument("negative exponent in word");
  };
  for (const auto& c : p.congruences) {
    check_word(c.lhs);
    check_word(c.rhs);
  }
  for (const auto& w : p.infinity_relations) check_word(w);
  for (const auto& u : p.unit_factors) {
    if (u.generator >= p.generator_count())
      throw std::invalid_argument("unit factor names an unknown generator");
    if (u.order < 2) throw std::invalid_argument("unit factor order must be >= 2");
  }
}

Presentation free_binoid(std::size_t n) {
  Presentation p;
  p.generators.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back(default_free_name(i));
  return p;
}

Presentation group_binoid(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("group binoid order must be >= 2");
  Presentation p;
  p.generators.push_back("t");
  Word lhs(1, k);
  p.congruences.push_back({std::move(lhs), zero_word(1)});
  p.unit_factors.push_back({0, k});
  return p;
}

Presentation smash(const Presentation& a, const Presentation& b) {
  Presentation r = a;
  std::set<std::string> names(a.generators.begin(), a.generators.end());
  std::size_t offset = a.generator_count();
  for (const auto& g : b.generators) {
    std::string name = g;
    int suffix = 2;
    while (names.count(name)) name = g + "_" + std::to_string(suffix++);
    names.insert(name);
    r.generators.push_back(name);
  }
  std::size_t total = r.generator_count();
  auto lift = [&](const Word& w) {
    Word v(total, 0);
    for (std::size_t i = 0; i < w.size(); ++i) v[offset + i] = w[i];
    return v;
  };
  for (auto& c : r.congruences) {
    c.lhs.resize(total, 0);
    c.rhs.resize(total, 0);
  }
  for (auto& w : r.infinity_relations) w.resize(total, 0);
  for (const auto& c : b.congruences) r.congruences.push_back({lift(c.lhs), lift(c.rhs)});
  for (const auto& w : b.infinity_relations) r.infinity_relations.push_back(lift(w));
  for (const auto& u : b.unit_factors) r.unit_factors.push_back({u.generator + offset, u.order});
  return r;
}

Presentation quotient_by_ideal(const Presentation& p, const std::vector<Word>& gens) {
  Presentation r = p;
  for (const auto& w : gens) {
    if (w.size() != p.generator_count())
      throw std::invalid_argument("ideal generator length does not match presentation");
    for (auto e : w)
      if (e < 0) throw std::invalid_argument("negative exponent in ideal generator");
    r.infinity_relations.push_back(w);
  }
  return r;
}

Presentation stanley_reisner(const SimplicialComplex& c) {
  const std::size_t n = c.vertices.size();
  if (n > 25) throw std::invalid_argument("too many vertices for subset enumeration");
  std::vector<std::uint32_t> facet_masks;
  for (const auto& f : c.facets) {
    std::uint32_t m = 0;
    for (auto v : f) {
      if (v >= n) throw std::invalid_argument("facet names unknown vertex");
      m |= 1u << v;
    }
    facet_masks.push_back(m);
  }
  for (std::size_t i = 0; i < facet_masks.size(); ++i)
    for (std::size_t j = 0; j < facet_masks.size(); ++j)
      if (i != j && (facet_masks[i] & facet_masks[j]) == facet_masks[i])
        throw std::invalid_argument("facets must be mutually non-contained");
  std::uint32_t covered = 0;
  for (auto m : facet_masks) covered |= m;
  if (covered != (n == 0 ? 0u : ((1u << n) - 1)))
    throw std::invalid_argument("every vertex must occur in at least one facet");

  auto is_face = [&](std::uint32_t s) {
    for (auto m : facet_masks)
      if ((s & m) == s) return true;
    return false;
  };

  Presentation p;
  p.generators = c.vertices;
  // Minimal nonfaces: nonfaces all of whose proper subsets are faces.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1u << n); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (auto s : subsets) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if ((s >> v) & 1u)
        if (!is_face(s & ~(1u << v))) minimal = false;
    if (!minimal) continue;
    Word w(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1u) w[v] = 1;
    p.infinity_relations.push_back(std::move(w));
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  Parser parser(text);
  return parser.parse_top();
}

Word parse_word(const Presentation& p, std::string_view text) {
  // Reuse the DSL parser by wrapping the word in a throwaway relation.
  std::ostringstream os;
  os << "binoid ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) os << ",";
    os << p.generators[i];
  }
  os << " | " << text << " = 0";
  Presentation q = parse_presentation(os.str());
  if (q.congruences.size() != 1) throw std::invalid_argument("bad word");
  return q.congruences[0].lhs;
}

std::string format_word(const Presentation& p, const Word& w) {
  if (is_zero(w)) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!first) os << "+";
    if (w[i] != 1) os << w[i];
    os << p.generators[i];
    first = false;
  }
  return os.str();
}

namespace {

std::string print_plain(const Presentation& p) {
  // "free n" when the presentation is literally a default-named free binoid.
  bool is_default_free = p.congruences.empty() && p.infinity_relations.empty() &&
                         p.unit_factors.empty();
  if (is_default_free) {
    for (std::size_t i = 0; i < p.generator_count(); ++i)
      if (p.generators[i] != default_free_name(i)) is_default_free = false;
  }
  if (is_default_free) return "free " + std::to_string(p.generator_count());

  std::ostringstream os;
  os << "binoid ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) os << ",";
    os << p.generators[i];
  }
  bool first = true;
  auto sep = [&]() -> std::ostream& {
    os << (first ? " | " : " ; ");
    first = false;
    return os;
  };
  for (const auto& c : p.congruences)
    sep() << format_word(p, c.lhs) << " = " << format_word(p, c.rhs);
  for (const auto& w : p.infinity_relations) sep() << format_word(p, w) << " = inf";
  return os.str();
}

// Attempts a structural smash print that preserves declared unit factors:
// group factors are emitted as `group k` blocks when they are relation-disjoint
// from everything else.
std::string print_structural(const Presentation& p) {
  if (p.unit_factors.empty()) return print_plain(p);
  std::vector<int> owner(p.generator_count(), -1);
  for (std::size_t u = 0; u < p.unit_factors.size(); ++u)
    owner[p.unit_factors[u].generator] = static_cast<int>(u);

  // A unit generator is separable if the only relation touching it is its own
  // order relation k*t = 0 and it appears in no inf-relation.
  std::vector<bool> separable(p.unit_factors.size(), true);
  std::vector<int> own_relation(p.unit_factors.size(), -1);
  for (std::size_t ci = 0; ci < p.congruences.size(); ++ci) {
    const auto& c = p.congruences[ci];
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
      if (owner[g] < 0 || (c.lhs[g] == 0 && c.rhs[g] == 0)) continue;
      std::size_t u = static_cast<std::size_t>(owner[g]);
      Word expect(p.generator_count(), 0);
      expect[g] = p.unit_factors[u].order;
      if (c.lhs == expect && is_zero(c.rhs) && own_relation[u] == -1)
        own_relation[u] = static_cast<int>(ci);
      else
        separable[u] = false;
    }
  }
  for (std::size_t u = 0; u < p.unit_factors.size(); ++u)
    if (own_relation[u] < 0) separable[u] = false;
  for (const auto& w : p.infinity_relations)
    for (std::size_t g = 0; g < p.generator_count(); ++g)
      if (w[g] != 0 && owner[g] >= 0) separable[static_cast<std::size_t>(owner[g])] = false;
  for (bool s : separable)
    if (!s) return print_plain(p);

  // Blocks: maximal runs of non-unit generators, and single unit generators,
  // in generator order.
  struct Block {
    bool group;
    std::int64_t order = 0;
    std::vector<std::size_t> gens;
  };
  std::vector<Block> blocks;
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    if (owner[g] >= 0) {
      blocks.push_back({true, p.unit_factors[static_cast<std::size_t>(owner[g])].order, {g}});
    } else {
      if (blocks.empty() || blocks.back().group) blocks.push_back({false, 0, {}});
      blocks.back().gens.push_back(g);
    }
  }
  if (blocks.size() < 2) return print_plain(p);

  std::ostringstream os;
  os << "smash";
  for (const auto& b : blocks) {
    os << " { ";
    if (b.group) {
      os << "group " << b.order;
    } else {
      Presentation sub;
      std::vector<std::size_t> back(p.generator_count(), 0);
      for (std::size_t i = 0; i < b.gens.size(); ++i) {
        back[b.gens[i]] = i;
        sub.generators.push_back(p.generators[b.gens[i]]);
      }
      auto in_block = [&](const Word& w) {
        for (std::size_t g = 0; g < w.size(); ++g)
          if (w[g] != 0 && std::find(b.gens.begin(), b.gens.end(), g) == b.gens.end())
            return false;
        return true;
      };
      auto restrict_word = [&](const Word& w) {
        Word v(b.gens.size(), 0);
        for (auto g : b.gens) v[back[g]] = w[g];
        return v;
      };
      for (std::size_t ci = 0; ci < p.congruences.size(); ++ci) {
        bool unit_owned = false;
        for (const auto& rel : own_relation)
          if (rel == static_cast<int>(ci)) unit_owned = true;
        if (unit_owned) continue;
        const auto& c = p.congruences[ci];
        if (!in_block(c.lhs) || !in_block(c.rhs)) return print_plain(p);
        sub.congruences.push_back({restrict_word(c.lhs), restrict_word(c.rhs)});
      }
      for (const auto& w : p.infinity_relations) {
        if (!in_block(w)) return print_plain(p);
        sub.infinity_relations.push_back(restrict_word(w));
      }
      os << print_plain(sub);
    }
    os << " }";
  }
  return os.str();
}

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.generators != b.generators) return false;
  if (a.infinity_relations != b.infinity_relations) return false;
  if (a.congruences.size() != b.congruences.size()) return false;
  for (std::size_t i = 0; i < a.congruences.size(); ++i)
    if (a.congruences[i].lhs != b.congruences[i].lhs ||
        a.congruences[i].rhs != b.congruences[i].rhs)
      return false;
  if (a.unit_factors.size() != b.unit_factors.size()) return false;
  for (std::size_t i = 0; i < a.unit_factors.size(); ++i)
    if (a.unit_factors[i].generator != b.unit_factors[i].generator ||
        a.unit_factors[i].order != b.unit_factors[i].order)
      return false;
  return true;
}

}  // namespace

std::string print_presentation(const Presentation& p) {
  // Multi-relation presentations with multiple natural statements can collide
  // with generator renaming; self-check the structural form and fall back.
  std::string structural = print_structural(p);
  try {
    if (same_presentation(parse_presentation(structural), p)) return structural;
  } catch (const ParseError&) {
  }
  return print_plain(p);
}

Presentation canonicalized(const Presentation& p) {
  std::vector<std::size_t> order(p.generator_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p.generators[a] < p.generators[b]; });
  std::vector<std::size_t> pos(p.generator_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  auto remap = [&](const Word& w) {
    Word v(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) v[pos[i]] = w[i];
    return v;
  };
  Presentation r;
  for (auto i : order) r.generators.push_back(p.generators[i]);
  for (const auto& c : p.congruences) {
    Word a = remap(c.lhs), b = remap(c.rhs);
    if (b < a) std::swap(a, b);
    r.congruences.push_back({std::move(a), std::move(b)});
  }
  std::sort(r.congruences.begin(), r.congruences.end(), [](const Congruence& a, const Congruence& b) {
    return a.lhs != b.lhs ? a.lhs < b.lhs : a.rhs < b.rhs;
  });
  for (const auto& w : p.infinity_relations) r.infinity_relations.push_back(remap(w));
  std::sort(r.infinity_relations.begin(), r.infinity_relations.end());
  for (const auto& u : p.unit_factors) r.unit_factors.push_back({pos[u.generator], u.order});
  std::sort(r.unit_factors.begin(), r.unit_factors.end(),
            [](const UnitFactor& a, const UnitFactor& b) { return a.generator < b.generator; });
  return r;
}

bool equivalent_presentations(const Presentation& a, const Presentation& b) {
  return same_presentation(canonicalized(a), canonicalized(b));
}

std::vector<std::vector<std::size_t>> relation_components(const Presentation& p) {
  const std::size_t n = p.generator_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto link_support = [&](const Word& w, const Word* w2) {
    long first = -1;
    auto visit = [&](const Word& v) {
      for (std::size_t g = 0; g < n; ++g) {
        if (v[g] == 0) continue;
        if (first < 0)
          first = static_cast<long>(g);
        else
          unite(static_cast<std::size_t>(first), g);
      }
    };
    visit(w);
    if (w2) visit(*w2);
  };
  for (const auto& c : p.congruences) link_support(c.lhs, &c.rhs);
  for (const auto& w : p.infinity_relations) link_support(w, nullptr);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t g = 0; g < n; ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, gens] : groups) out.push_back(std::move(gens));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::optional<Word> restrict_word(const Word& w, const std::vector<std::size_t>& gens) {
  Word v(gens.size(), 0);
  std::int64_t covered = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    v[i] = w[gens[i]];
    covered += v[i];
  }
  if (covered != degree(w)) return std::nullopt;
  return v;
}

Presentation restrict_to(const Presentation& p, const std::vector<std::size_t>& gens) {
  Presentation r;
  for (auto g : gens) r.generators.push_back(p.generators[g]);
  for (const auto& c : p.congruences) {
    bool touches = false;
    for (auto g : gens)
      if (c.lhs[g] != 0 || c.rhs[g] != 0) touches = true;
    if (!touches) continue;
    auto l = restrict_word(c.lhs, gens);
    auto rr = restrict_word(c.rhs, gens);
    if (!l || !rr) throw std::invalid_argument("relation crosses the generator subset");
    r.congruences.push_back({std::move(*l), std::move(*rr)});
  }
  for (const auto& w : p.infinity_relations) {
    bool touches = false;
    for (auto g : gens)
      if (w[g] != 0) touches = true;
    if (!touches && !is_zero(w)) continue;
    auto v = restrict_word(w, gens);
    if (!v) throw std::invalid_argument("relation crosses the generator subset");
    r.infinity_relations.push_back(std::move(*v));
  }
  for (const auto& u : p.unit_factors) {
    auto it = std::find(gens.begin(), gens.end(), u.generator);
    if (it != gens.end())
      r.unit_factors.push_back({static_cast<std::size_t>(it - gens.begin()), u.order});
  }
  return r;
}

}  // namespace binoid
