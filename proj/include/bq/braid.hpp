#pragma once

// Virtual braid words and the moves used to generate equivalent closures.
//
// Letter order convention: the leftmost letter is the bottom of the braid
// diagram. Every action and matrix product in this library reads words in
// that order.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bq/error.hpp"

namespace bq {

enum class LetterKind { classical, virtual_crossing };

struct BraidLetter {
  LetterKind kind = LetterKind::classical;
  int index = 1;    // crossing between strands index and index+1
  int exponent = 1; // +1 or -1; always +1 for virtual letters

  static constexpr BraidLetter sigma(int i, int exponent = 1) noexcept {
    return {LetterKind::classical, i, exponent};
  }
  static constexpr BraidLetter nu(int i) noexcept { return {LetterKind::virtual_crossing, i, 1}; }

  constexpr bool is_virtual() const noexcept { return kind == LetterKind::virtual_crossing; }

  // nu_i is an involution.
  constexpr BraidLetter inverse() const noexcept {
    return is_virtual() ? *this : BraidLetter{kind, index, -exponent};
  }

  constexpr bool cancels(const BraidLetter& other) const noexcept { return inverse() == other; }

  friend constexpr bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

inline std::string render_letter(const BraidLetter& l) {
  if (l.is_virtual()) return "v" + std::to_string(l.index);
  return (l.exponent < 0 ? "-s" : "s") + std::to_string(l.index);
}

class BraidWord {
public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<BraidLetter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw DomainError("braid must have at least one strand");
    for (const auto& l : letters_) {
      if (l.index < 1 || l.index > strands_ - 1)
        throw DomainError("letter " + render_letter(l) + " out of range for " +
                          std::to_string(strands_) + " strands");
      if (l.is_virtual() ? l.exponent != 1 : (l.exponent != 1 && l.exponent != -1))
        throw DomainError("bad exponent on letter " + render_letter(l));
    }
  }

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

// ---------------------------------------------------------------------------
// Text form:  word := "n=" INT ";" letter*   letter := sN | -sN | vN

namespace detail {

inline int parse_positive_int(std::string_view tok, std::string_view what) {
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected decimal integer for " + std::string(what) + ", got '" +
                     std::string(tok) + "'");
  return std::stoi(std::string(tok));
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace detail

inline BraidWord parse_braid_word(std::string_view text) {
  auto body = detail::trim(text);
  if (body.substr(0, 2) != "n=") throw ParseError("braid word must start with 'n='");
  body.remove_prefix(2);
  auto semi = body.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' after strand count");
  int n = detail::parse_positive_int(detail::trim(body.substr(0, semi)), "strand count");
  if (n < 1) throw ParseError("strand count must be at least 1");

  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(body.substr(semi + 1))};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    BraidLetter l;
    if (t.substr(0, 2) == "-s") {
      l = BraidLetter::sigma(0, -1);
      t.remove_prefix(2);
    } else if (!t.empty() && t[0] == 's') {
      l = BraidLetter::sigma(0, 1);
      t.remove_prefix(1);
    } else if (!t.empty() && t[0] == 'v') {
      l = BraidLetter::nu(0);
      t.remove_prefix(1);
    } else {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    l.index = detail::parse_positive_int(t, "letter index");
    if (l.index < 1 || l.index > n - 1)
      throw ParseError("letter '" + tok + "' index out of range for n=" + std::to_string(n));
    letters.push_back(l);
  }
  return BraidWord(n, std::move(letters));
}

inline std::string render_braid_word(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strands()) + ";";
  for (const auto& l : w.letters()) out += " " + render_letter(l);
  return out;
}

// ---------------------------------------------------------------------------
// Group operations

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw DomainError("concatenating braids with different strand counts");
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord invert_braid(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(out));
}

// Cancels s s^-1, s^-1 s and v v until no adjacent pair cancels.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

// Closure of the inverse word is the vertical mirror image of the closure.
inline BraidWord vertical_mirror(const BraidWord& w) { return invert_braid(w); }

// Switched virtualization of every classical crossing (s_i^e -> v_i s_i^-e v_i),
// followed by orientation reversal of the closure. Reversing every strand and
// rotating the picture by a half turn reverses the letter order and sends
// index i to n - i.
inline BraidWord ad_inversion(const BraidWord& w) {
  const int n = w.strands();
  std::vector<BraidLetter> out;
  out.reserve(3 * w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int i = n - it->index;
    if (it->is_virtual()) {
      out.push_back(BraidLetter::nu(i));
    } else {
      out.push_back(BraidLetter::nu(i));
      out.push_back(BraidLetter::sigma(i, -it->exponent));
      out.push_back(BraidLetter::nu(i));
    }
  }
  return BraidWord(n, std::move(out));
}

// ---------------------------------------------------------------------------
// Relator moves of the virtual braid group presentation.

enum class RelatorFamily {
  braid,         // s_i s_i+1 s_i = s_i+1 s_i s_i+1 (all exponents equal)
  virtual_braid, // v_i v_i+1 v_i = v_i+1 v_i v_i+1
  mixed,         // s_i^e v_i+1 v_i = v_i+1 v_i s_i+1^e
  commute        // x_i y_k = y_k x_i, |i - k| > 1
};

enum class MoveDirection { forward, backward };

struct RelatorMove {
  RelatorFamily family = RelatorFamily::braid;
  std::size_t position = 0;
  MoveDirection direction = MoveDirection::forward;

  friend bool operator==(const RelatorMove&, const RelatorMove&) = default;
};

namespace detail {

// Replacement window for the move, or an empty vector when the move does not match.
inline std::vector<BraidLetter> relator_replacement(const std::vector<BraidLetter>& letters,
                                                    const RelatorMove& m) {
  const std::size_t width = m.family == RelatorFamily::commute ? 2 : 3;
  if (m.position + width > letters.size()) return {};
  const BraidLetter* x = &letters[m.position];
  const int step = m.direction == MoveDirection::forward ? 1 : -1;

  switch (m.family) {
  case RelatorFamily::braid:
  case RelatorFamily::virtual_braid: {
    const bool want_virtual = m.family == RelatorFamily::virtual_braid;
    const auto& a = x[0];
    const auto& b = x[1];
    if (a.is_virtual() != want_virtual || b.is_virtual() != want_virtual) return {};
    if (!(x[2] == a) || b.exponent != a.exponent || b.index != a.index + step) return {};
    return {b, a, b};
  }
  case RelatorFamily::mixed: {
    if (m.direction == MoveDirection::forward) {
      const auto& s = x[0];
      const int i = s.index;
      if (s.is_virtual() || !(x[1] == BraidLetter::nu(i + 1)) || !(x[2] == BraidLetter::nu(i)))
        return {};
      return {BraidLetter::nu(i + 1), BraidLetter::nu(i), BraidLetter::sigma(i + 1, s.exponent)};
    }
    const auto& s = x[2];
    const int i = s.index - 1;
    if (s.is_virtual() || i < 1 || !(x[0] == BraidLetter::nu(i + 1)) || !(x[1] == BraidLetter::nu(i)))
      return {};
    return {BraidLetter::sigma(i, s.exponent), BraidLetter::nu(i + 1), BraidLetter::nu(i)};
  }
  case RelatorFamily::commute:
    if (std::abs(x[0].index - x[1].index) <= 1) return {};
    return {x[1], x[0]};
  }
  return {};
}

} // namespace detail

inline bool relator_move_applies(const BraidWord& w, const RelatorMove& m) {
  return !detail::relator_replacement(w.letters(), m).empty();
}

inline BraidWord apply_relator_move(const BraidWord& w, const RelatorMove& m) {
  auto repl = detail::relator_replacement(w.letters(), m);
  if (repl.empty())
    throw DomainError("relator move does not match at position " + std::to_string(m.position));
  auto letters = w.letters();
  std::copy(repl.begin(), repl.end(), letters.begin() + static_cast<std::ptrdiff_t>(m.position));
  return BraidWord(w.strands(), std::move(letters));
}

inline std::vector<RelatorMove> applicable_relator_moves(const BraidWord& w) {
  std::vector<RelatorMove> out;
  for (std::size_t pos = 0; pos < w.length(); ++pos)
    for (auto fam : {RelatorFamily::braid, RelatorFamily::virtual_braid, RelatorFamily::mixed,
                     RelatorFamily::commute})
      for (auto dir : {MoveDirection::forward, MoveDirection::backward}) {
        if (fam == RelatorFamily::commute && dir == MoveDirection::backward) continue;
        RelatorMove m{fam, pos, dir};
        if (relator_move_applies(w, m)) out.push_back(m);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Markov-type moves on the closure.

inline BraidWord conjugate(const BraidWord& w, const BraidLetter& by) {
  std::vector<BraidLetter> letters;
  letters.reserve(w.length() + 2);
  letters.push_back(by);
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(by.inverse());
  return BraidWord(w.strands(), std::move(letters));
}

inline BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  auto letters = w.letters();
  letters.push_back(BraidLetter::sigma(w.strands(), sign));
  return BraidWord(w.strands() + 1, std::move(letters));
}

// Only the syntactically safe case: last letter s_{n-1}^{+-1} and no other
// letter touches index n-1.
inline bool can_destabilize(const BraidWord& w) {
  const int top = w.strands() - 1;
  if (top < 1 || w.empty()) return false;
  const auto& last = w.letters().back();
  if (last.is_virtual() || last.index != top) return false;
  return std::none_of(w.letters().begin(), w.letters().end() - 1,
                      [top](const BraidLetter& l) { return l.index == top; });
}

inline BraidWord destabilize(const BraidWord& w) {
  if (!can_destabilize(w)) throw DomainError("destabilization precondition violated");
  std::vector<BraidLetter> letters(w.letters().begin(), w.letters().end() - 1);
  return BraidWord(w.strands() - 1, std::move(letters));
}

struct Conjugate {
  BraidLetter by;
};
struct Stabilize {
  int sign = 1;
};
struct Destabilize {};
using MarkovMove = std::variant<Conjugate, Stabilize, Destabilize>;

inline BraidWord markov_move(const BraidWord& w, const MarkovMove& move) {
  return std::visit(
      [&w](const auto& m) -> BraidWord {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Conjugate>)
          return conjugate(w, m.by);
        else if constexpr (std::is_same_v<M, Stabilize>)
          return stabilize(w, m.sign);
        else
          return destabilize(w);
      },
      move);
}

// ---------------------------------------------------------------------------
// Seeded random words. Letters are drawn from the 3(n-1) symbols
// s_i, s_i^-1, v_i by taking mt19937_64 output modulo the alphabet size, so a
// seed produces the same word on every standard library.

inline BraidLetter random_letter(int strands, std::mt19937_64& rng) {
  if (strands < 2) throw DomainError("no braid generators on a single strand");
  const auto alphabet = static_cast<std::uint64_t>(3 * (strands - 1));
  const auto pick = static_cast<int>(rng() % alphabet);
  const int i = pick / 3 + 1;
  switch (pick % 3) {
  case 0: return BraidLetter::sigma(i, 1);
  case 1: return BraidLetter::sigma(i, -1);
  default: return BraidLetter::nu(i);
  }
}

inline BraidWord random_braid(int strands, int length, std::uint64_t seed) {
  if (strands < 1) throw DomainError("random_braid needs at least one strand");
  if (length < 0) throw DomainError("random_braid needs a non-negative length");
  if (strands == 1) return BraidWord(1, {});
  std::mt19937_64 rng(seed);
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) letters.push_back(random_letter(strands, rng));
  return BraidWord(strands, std::move(letters));
}

} // namespace bq
