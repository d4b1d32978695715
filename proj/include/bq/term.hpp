#pragma once

// Symbolic biquandle expressions and presentations.
//
// The four operations are written functionally: ur(x,y) is x*y (up-right),
// lr(x,y) is x#y (down-right), ul(x,y) is x*bar y, ll(x,y) is x#bar y.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bq/error.hpp"

namespace bq {

enum class Op { ur, lr, ul, ll };

inline constexpr Op all_ops[] = {Op::ur, Op::lr, Op::ul, Op::ll};

inline const char* op_name(Op op) noexcept {
  switch (op) {
  case Op::ur: return "ur";
  case Op::lr: return "lr";
  case Op::ul: return "ul";
  case Op::ll: return "ll";
  }
  return "?";
}

// Immutable expression tree; subterms are shared.
class Term {
public:
  Term() = default;

  static Term gen(std::string name);
  static Term apply(Op op, Term left, Term right);

  bool valid() const noexcept { return node_ != nullptr; }
  bool is_generator() const;
  const std::string& name() const;
  Op op() const;
  const Term& left() const;
  const Term& right() const;

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  std::string name; // empty for operation nodes
  Op op = Op::ur;
  Term left;
  Term right;
};

inline Term Term::gen(std::string name) {
  return Term(std::make_shared<const Node>(Node{std::move(name), Op::ur, {}, {}}));
}

inline Term Term::apply(Op op, Term left, Term right) {
  return Term(std::make_shared<const Node>(Node{{}, op, std::move(left), std::move(right)}));
}

inline bool Term::is_generator() const { return !node_->name.empty(); }
inline const std::string& Term::name() const { return node_->name; }
inline Op Term::op() const { return node_->op; }
inline const Term& Term::left() const { return node_->left; }
inline const Term& Term::right() const { return node_->right; }

inline bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.is_generator() || b.is_generator())
    return a.is_generator() && b.is_generator() && a.name() == b.name();
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

inline Term ur(Term x, Term y) { return Term::apply(Op::ur, std::move(x), std::move(y)); }
inline Term lr(Term x, Term y) { return Term::apply(Op::lr, std::move(x), std::move(y)); }
inline Term ul(Term x, Term y) { return Term::apply(Op::ul, std::move(x), std::move(y)); }
inline Term ll(Term x, Term y) { return Term::apply(Op::ll, std::move(x), std::move(y)); }

namespace detail {

template <class Rename>
void render_term_into(const Term& t, std::string& out, const Rename& rename) {
  if (t.is_generator()) {
    out += rename(t.name());
    return;
  }
  out += op_name(t.op());
  out += '(';
  render_term_into(t.left(), out, rename);
  out += ',';
  render_term_into(t.right(), out, rename);
  out += ')';
}

} // namespace detail

inline std::string render_term(const Term& t) {
  std::string out;
  detail::render_term_into(t, out, [](const std::string& s) -> const std::string& { return s; });
  return out;
}

inline void collect_generators(const Term& t, std::set<std::string>& names) {
  if (t.is_generator()) {
    names.insert(t.name());
    return;
  }
  collect_generators(t.left(), names);
  collect_generators(t.right(), names);
}

struct Relation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Text form used by files and the CLI:
//   gens a b
//   rel ur(a,b) = a
inline std::string render_presentation(const Presentation& p) {
  std::string out = "gens";
  for (const auto& g : p.generators) out += " " + g;
  out += '\n';
  for (const auto& r : p.relations) out += "rel " + render_term(r.lhs) + " = " + render_term(r.rhs) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

class TermParser {
public:
  TermParser(std::string_view src, int line) : src_(src), line_(line) {}

  Term parse_term() {
    skip_ws();
    std::string id = ident();
    skip_ws();
    if (peek() != '(') return Term::gen(std::move(id));
    Op op;
    if (id == "ur") op = Op::ur;
    else if (id == "lr") op = Op::lr;
    else if (id == "ul") op = Op::ul;
    else if (id == "ll") op = Op::ll;
    else fail("unknown operation '" + id + "'");
    expect('(');
    Term l = parse_term();
    expect(',');
    Term r = parse_term();
    expect(')');
    return Term::apply(op, std::move(l), std::move(r));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ": " + msg);
  }

private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string ident() {
    if (!is_ident_start(peek())) fail("expected identifier");
    std::size_t start = pos_;
    while (is_ident_char(peek())) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
};

} // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::set<std::string> declared;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream words{std::string(line)};
    std::string keyword;
    if (!(words >> keyword)) continue;

    if (keyword == "gens") {
      if (have_gens) throw ParseError("line " + std::to_string(lineno) + ": duplicate 'gens' line");
      have_gens = true;
      std::string g;
      while (words >> g) {
        if (!detail::is_ident_start(g[0]) ||
            !std::all_of(g.begin(), g.end(), [](char c) { return detail::is_ident_char(c); }))
          throw ParseError("line " + std::to_string(lineno) + ": bad generator name '" + g + "'");
        if (!declared.insert(g).second)
          throw ParseError("line " + std::to_string(lineno) + ": generator '" + g + "' declared twice");
        p.generators.push_back(g);
      }
      if (p.generators.empty())
        throw ParseError("line " + std::to_string(lineno) + ": 'gens' needs at least one generator");
    } else if (keyword == "rel") {
      if (!have_gens) throw ParseError("line " + std::to_string(lineno) + ": 'rel' before 'gens'");
      auto rest = line.substr(line.find("rel") + 3);
      detail::TermParser tp(rest, lineno);
      Term lhs = tp.parse_term();
      tp.expect('=');
      Term rhs = tp.parse_term();
      if (!tp.at_end()) tp.fail("trailing text after relation");
      std::set<std::string> used;
      collect_generators(lhs, used);
      collect_generators(rhs, used);
      for (const auto& u : used)
        if (!declared.count(u)) tp.fail("relation mentions undeclared generator '" + u + "'");
      p.relations.push_back({std::move(lhs), std::move(rhs)});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!have_gens) throw ParseError("presentation has no 'gens' line");
  return p;
}

// ---------------------------------------------------------------------------
// Syntactic comparison up to a bijection of generator names. Each relation is
// an unordered pair {lhs, rhs}; relations form a multiset.

inline constexpr std::size_t max_renaming_generators = 8;

namespace detail {

using RelationKey = std::pair<std::string, std::string>;

inline std::vector<RelationKey> relation_keys(const Presentation& p,
                                              const std::map<std::string, std::string>& rename) {
  auto lookup = [&rename](const std::string& s) -> const std::string& { return rename.at(s); };
  std::vector<RelationKey> keys;
  keys.reserve(p.relations.size());
  for (const auto& r : p.relations) {
    std::string a, b;
    render_term_into(r.lhs, a, lookup);
    render_term_into(r.rhs, b, lookup);
    if (b < a) std::swap(a, b);
    keys.emplace_back(std::move(a), std::move(b));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

} // namespace detail

inline bool presentations_equal_up_to_renaming(const Presentation& p, const Presentation& q) {
  const auto n = p.generators.size();
  if (n > max_renaming_generators || q.generators.size() > max_renaming_generators)
    throw DomainError("renaming search limited to " + std::to_string(max_renaming_generators) +
                      " generators");
  if (n != q.generators.size() || p.relations.size() != q.relations.size()) return false;

  // Placeholder names "@k" cannot collide with identifiers.
  std::map<std::string, std::string> q_names;
  for (std::size_t k = 0; k < n; ++k) q_names[q.generators[k]] = "@" + std::to_string(k);
  const auto target = detail::relation_keys(q, q_names);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::map<std::string, std::string> p_names;
    for (std::size_t k = 0; k < n; ++k) p_names[p.generators[k]] = "@" + std::to_string(perm[k]);
    if (detail::relation_keys(p, p_names) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace bq
