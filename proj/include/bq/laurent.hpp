#pragma once

// Exact Laurent polynomials in s, t over the integers.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bq/error.hpp"

namespace bq {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in polynomial arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in polynomial arithmetic");
  return r;
}

} // namespace detail

// Exponent pair (i, j) of the monomial s^i t^j.
using Exponent = std::pair<int, int>;

class LaurentPoly {
public:
  using Terms = std::map<Exponent, std::int64_t>; // never stores a zero coefficient

  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) { add_term({0, 0}, c); } // NOLINT: integers embed implicitly

  static LaurentPoly monomial(std::int64_t c, int i, int j) {
    LaurentPoly p;
    p.add_term({i, j}, c);
    return p;
  }
  static LaurentPoly s(int power = 1) { return monomial(1, power, 0); }
  static LaurentPoly t(int power = 1) { return monomial(1, 0, power); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  std::int64_t coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Largest exponent in lexicographic (s, t) order; polynomial must be non-zero.
  std::pair<Exponent, std::int64_t> leading_term() const { return *terms_.rbegin(); }

  int min_s_degree() const {
    int d = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) d = std::min(d, e.first);
    return d;
  }
  int min_t_degree() const {
    int d = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) d = std::min(d, e.second);
    return d;
  }

  void add_term(Exponent e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly scale_by_monomial(std::int64_t c, int i, int j) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(Exponent{e.first + i, e.second + j}, detail::checked_mul(v, c));
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.scale_by_monomial(-1, 0, 0); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea.first + eb.first, ea.second + eb.second}, detail::checked_mul(ca, cb));
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  Terms terms_;
};

// Exact quotient a / b. Both must have non-negative exponents so that
// lexicographic long division terminates; throws if b does not divide a.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (b.is_monomial()) {
    const auto [e, c] = b.leading_term();
    LaurentPoly q;
    for (const auto& [ea, ca] : a.terms()) {
      if (ca % c != 0) throw DomainError("inexact polynomial division");
      q.add_term({ea.first - e.first, ea.second - e.second}, ca / c);
    }
    return q;
  }
  const auto [lead_e, lead_c] = b.leading_term();
  LaurentPoly rem = a;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading_term();
    const int di = re.first - lead_e.first;
    const int dj = re.second - lead_e.second;
    if (di < 0 || dj < 0 || rc % lead_c != 0) throw DomainError("inexact polynomial division");
    const auto qc = rc / lead_c;
    quot.add_term({di, dj}, qc);
    rem -= b.scale_by_monomial(qc, di, dj);
  }
  return quot;
}

// Canonical representative of p up to units +-s^i t^j: minimal s- and
// t-degrees become zero, and the coefficient of the lexicographically
// smallest monomial is made positive.
inline LaurentPoly normalize_gap(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  auto q = p.scale_by_monomial(1, -p.min_s_degree(), -p.min_t_degree());
  if (q.terms().begin()->second < 0) q = -q;
  return q;
}

// Terms in graded order (total degree ascending, then s-degree descending),
// e.g. "1 - s - t + s*t", "-1 + s^2*t^2", "s^-1 - t".
inline std::string format_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, std::int64_t>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second;
    const int dy = y.first.first + y.first.second;
    if (dx != dy) return dx < dy;
    return x.first.first > y.first.first;
  });
  auto power = [](const char* var, int e) {
    std::string out = var;
    if (e != 1) out += "^" + std::to_string(e);
    return out;
  };
  std::string out;
  for (const auto& [e, c] : terms) {
    const bool neg = c < 0;
    const auto mag = neg ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    if (e.first != 0) mono = power("s", e.first);
    if (e.second != 0) mono += (mono.empty() ? "" : "*") + power("t", e.second);
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << format_laurent(p); }

} // namespace bq
