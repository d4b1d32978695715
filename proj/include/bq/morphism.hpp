#pragma once

// Crossing morphisms and the presentations they induce on closed braids.

#include <string>
#include <utility>
#include <vector>

#include "bq/braid.hpp"
#include "bq/term.hpp"

namespace bq {

enum class MorphismKind { phi_up, phi_up_inv, phi_down, phi_down_inv, tau };

using TermPair = std::pair<Term, Term>;

//   phi_u(a,b)    = (b ur a, a lr b)     phi_u^-1(a,b) = (b ll a, a ul b)
//   phi_d(a,b)    = (b ul a, a ll b)     phi_d^-1(a,b) = (b lr a, a ur b)
//   tau(a,b)      = (b, a)
inline TermPair apply_morphism(MorphismKind kind, const TermPair& in) {
  const auto& [a, b] = in;
  switch (kind) {
  case MorphismKind::phi_up: return {ur(b, a), lr(a, b)};
  case MorphismKind::phi_up_inv: return {ll(b, a), ul(a, b)};
  case MorphismKind::phi_down: return {ul(b, a), ll(a, b)};
  case MorphismKind::phi_down_inv: return {lr(b, a), ur(a, b)};
  case MorphismKind::tau: return {b, a};
  }
  return in;
}

inline MorphismKind up_morphism(const BraidLetter& l) {
  if (l.is_virtual()) return MorphismKind::tau;
  return l.exponent > 0 ? MorphismKind::phi_up : MorphismKind::phi_up_inv;
}

// Downward reading of a letter: s_i^e acts by phi_d^e. This is the
// convention under which f_u(x) = T f_d(x^-1) T holds letter by letter.
inline MorphismKind down_morphism(const BraidLetter& l) {
  if (l.is_virtual()) return MorphismKind::tau;
  return l.exponent > 0 ? MorphismKind::phi_down : MorphismKind::phi_down_inv;
}

namespace detail {

inline void check_tuple(const BraidWord& w, std::size_t size) {
  if (size != static_cast<std::size_t>(w.strands()))
    throw DomainError("tuple length " + std::to_string(size) + " does not match " +
                      std::to_string(w.strands()) + " strands");
}

inline void act_at(std::vector<Term>& tuple, std::size_t pos, MorphismKind kind) {
  auto [x, y] = apply_morphism(kind, {tuple[pos], tuple[pos + 1]});
  tuple[pos] = std::move(x);
  tuple[pos + 1] = std::move(y);
}

} // namespace detail

// f_u: letters act bottom to top on strands (i, i+1), so the map of a word is
// the composite of its letters with later letters applied last.
inline std::vector<Term> braid_act_up(const BraidWord& w, std::vector<Term> tuple) {
  detail::check_tuple(w, tuple.size());
  for (const auto& l : w.letters())
    detail::act_at(tuple, static_cast<std::size_t>(l.index - 1), up_morphism(l));
  return tuple;
}

// f_d: multiplication preserving, so the last letter acts first; the block of
// letter i sits on tuple positions (n-i, n-i+1), 1-based.
inline std::vector<Term> braid_act_down(const BraidWord& w, std::vector<Term> tuple) {
  detail::check_tuple(w, tuple.size());
  const auto n = static_cast<std::size_t>(w.strands());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    detail::act_at(tuple, n - 1 - static_cast<std::size_t>(it->index), down_morphism(*it));
  return tuple;
}

inline std::string strand_generator(int k) { return "a" + std::to_string(k); }

inline std::vector<std::string> strand_generators(int n) {
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back(strand_generator(k));
  return names;
}

// <a1..an | f_u(w)(a1..an) = (a1..an)>
inline Presentation presentation_from_braid(const BraidWord& w) {
  Presentation p{strand_generators(w.strands()), {}};
  std::vector<Term> bottom;
  for (const auto& g : p.generators) bottom.push_back(Term::gen(g));
  auto top = braid_act_up(w, bottom);
  for (std::size_t k = 0; k < top.size(); ++k) p.relations.push_back({top[k], bottom[k]});
  return p;
}

// <a1..an | f_d(w)(an..a1) = (an..a1)>
inline Presentation presentation_from_braid_down(const BraidWord& w) {
  Presentation p{strand_generators(w.strands()), {}};
  std::vector<Term> top;
  for (auto it = p.generators.rbegin(); it != p.generators.rend(); ++it) top.push_back(Term::gen(*it));
  auto bottom = braid_act_down(w, top);
  for (std::size_t k = 0; k < bottom.size(); ++k) p.relations.push_back({bottom[k], top[k]});
  return p;
}

} // namespace bq
