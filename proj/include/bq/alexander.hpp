#pragma once

// Alexander biquandle: crossing matrices, relation matrices and the
// generalized Alexander polynomial G_K(s, t).
//
// Operations on a module over Z[s^+-1, t^+-1]:
//   a ur b = t a + (1 - st) b      a lr b = s a
//   a ul b = t^-1 a + (1 - s^-1 t^-1) b      a ll b = s^-1 a

#include <map>
#include <string>
#include <vector>

#include "bq/braid.hpp"
#include "bq/laurent.hpp"
#include "bq/matrix.hpp"
#include "bq/term.hpp"

namespace bq {

using LaurentMatrix = Matrix<LaurentPoly>;

// The nine crossing roles. phi_u = A, phi_u^-1 = B, phi_d = B_hat,
// phi_d^-1 = A_hat, tau = V. C, C_hat, D, D_hat are the sideways crossings.
enum class CrossingOrientation { A, A_hat, B, B_hat, C, C_hat, D, D_hat, V };

inline LaurentMatrix crossing_matrix(CrossingOrientation o) {
  using P = LaurentPoly;
  const P s = P::s(), t = P::t(), si = P::s(-1), ti = P::t(-1);
  const P one = 1, zero = 0;
  switch (o) {
  case CrossingOrientation::A: return {{one - s * t, t}, {s, zero}};
  case CrossingOrientation::A_hat: return {{zero, s}, {t, one - s * t}};
  case CrossingOrientation::B: return {{zero, si}, {ti, one - si * ti}};
  case CrossingOrientation::B_hat: return {{one - si * ti, ti}, {si, zero}};
  case CrossingOrientation::C: return {{zero, si}, {t, si - t}};
  case CrossingOrientation::C_hat: return {{si - t, t}, {si, zero}};
  case CrossingOrientation::D: return {{zero, s}, {ti, s - ti}};
  case CrossingOrientation::D_hat: return {{s - ti, ti}, {s, zero}};
  case CrossingOrientation::V: return {{zero, one}, {one, zero}};
  }
  throw DomainError("unknown crossing orientation");
}

// Product of 1_{i-1} (+) X (+) 1_{n-1-i} blocks, later letters on the left,
// matching braid_act_up on column vectors.
inline LaurentMatrix braid_matrix_up(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  auto m = LaurentMatrix::identity(n);
  for (const auto& l : w.letters()) {
    const auto role = l.is_virtual()      ? CrossingOrientation::V
                      : l.exponent > 0    ? CrossingOrientation::A
                                          : CrossingOrientation::B;
    m = LaurentMatrix::embed(n, static_cast<std::size_t>(l.index - 1), crossing_matrix(role)) * m;
  }
  return m;
}

// Product of 1_{n-1-i} (+) X (+) 1_{i-1} blocks in word order (f_d is
// multiplication preserving); s_i -> phi_d = B_hat, s_i^-1 -> phi_d^-1 = A_hat.
inline LaurentMatrix braid_matrix_down(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  auto m = LaurentMatrix::identity(n);
  for (const auto& l : w.letters()) {
    const auto role = l.is_virtual()      ? CrossingOrientation::V
                      : l.exponent > 0    ? CrossingOrientation::B_hat
                                          : CrossingOrientation::A_hat;
    m = m * LaurentMatrix::embed(n, n - 1 - static_cast<std::size_t>(l.index), crossing_matrix(role));
  }
  return m;
}

// Permutation matrix reversing n-tuples.
inline LaurentMatrix reversal_matrix(std::size_t n) {
  LaurentMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) r(k, n - 1 - k) = 1;
  return r;
}

inline LaurentMatrix relation_matrix_from_braid(const BraidWord& w) {
  return braid_matrix_up(w) - LaurentMatrix::identity(static_cast<std::size_t>(w.strands()));
}

// Coefficient row of a term's Alexander linearization over the given generators.
inline std::vector<LaurentPoly> linearize_alexander(const Term& term,
                                                    const std::map<std::string, std::size_t>& index) {
  std::vector<LaurentPoly> row(index.size());
  // Accumulates coeff * term into row; shared subterms are simply revisited.
  auto walk = [&](auto&& self, const Term& t, const LaurentPoly& coeff) -> void {
    if (t.is_generator()) {
      auto it = index.find(t.name());
      if (it == index.end()) throw DomainError("term uses unknown generator '" + t.name() + "'");
      row[it->second] += coeff;
      return;
    }
    const LaurentPoly s = LaurentPoly::s(), tt = LaurentPoly::t();
    const LaurentPoly si = LaurentPoly::s(-1), ti = LaurentPoly::t(-1);
    switch (t.op()) {
    case Op::ur:
      self(self, t.left(), coeff * tt);
      self(self, t.right(), coeff * (LaurentPoly(1) - s * tt));
      break;
    case Op::lr: self(self, t.left(), coeff * s); break;
    case Op::ul:
      self(self, t.left(), coeff * ti);
      self(self, t.right(), coeff * (LaurentPoly(1) - si * ti));
      break;
    case Op::ll: self(self, t.left(), coeff * si); break;
    }
  };
  walk(walk, term, LaurentPoly(1));
  return row;
}

// One row per relation (lhs - rhs), one column per generator.
inline LaurentMatrix relation_matrix_from_presentation(const Presentation& p) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < p.generators.size(); ++k) index[p.generators[k]] = k;
  LaurentMatrix m(p.relations.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto lhs = linearize_alexander(p.relations[r].lhs, index);
    const auto rhs = linearize_alexander(p.relations[r].rhs, index);
    for (std::size_t c = 0; c < lhs.size(); ++c) m(r, c) = lhs[c] - rhs[c];
  }
  return m;
}

// Exact determinant. Each row is first multiplied by a monomial so that all
// exponents are non-negative; fraction-free Bareiss elimination then works in
// Z[s, t], and the row monomials are divided back out at the end.
inline LaurentPoly determinant(const LaurentMatrix& input) {
  if (!input.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;

  LaurentMatrix m = input;
  int shift_s = 0, shift_t = 0;
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    int ms = 0, mt = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      ms = any ? std::min(ms, e.min_s_degree()) : e.min_s_degree();
      mt = any ? std::min(mt, e.min_t_degree()) : e.min_t_degree();
      any = true;
    }
    if (!any) return 0;
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).scale_by_monomial(1, -ms, -mt);
    shift_s += ms;
    shift_t += mt;
  }

  int sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return m(n - 1, n - 1).scale_by_monomial(sign, shift_s, shift_t);
}

inline LaurentPoly gap(const BraidWord& w) { return normalize_gap(determinant(relation_matrix_from_braid(w))); }

inline LaurentPoly gap(const Presentation& p) {
  if (p.relations.size() != p.generators.size())
    throw DomainError("presentation has " + std::to_string(p.relations.size()) + " relations and " +
                      std::to_string(p.generators.size()) + " generators; G_K needs a square system");
  return normalize_gap(determinant(relation_matrix_from_presentation(p)));
}

} // namespace bq
