#pragma once

// Quaternionic linearization of biquandle presentations, restriction of
// scalars to F_p, and the triviality test built on F_p rank.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bq/error.hpp"
#include "bq/matrix.hpp"
#include "bq/quaternion.hpp"
#include "bq/term.hpp"

namespace bq {

// Sum of left-coefficient terms q * g; zero coefficients are never stored.
class QLinear {
public:
  QLinear() = default;
  QLinear(std::initializer_list<std::pair<const std::string, Quaternion>> init) {
    for (const auto& [g, q] : init) add(g, q);
  }

  void add(const std::string& gen, const Quaternion& q) {
    auto& slot = coeffs_[gen];
    slot += q;
    if (slot.is_zero()) coeffs_.erase(gen);
  }

  Quaternion coefficient(const std::string& gen) const {
    auto it = coeffs_.find(gen);
    return it == coeffs_.end() ? Quaternion{} : it->second;
  }

  const std::map<std::string, Quaternion>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // q * (this)
  QLinear left_multiply(const Quaternion& q) const {
    QLinear out;
    for (const auto& [g, c] : coeffs_) out.add(g, q * c);
    return out;
  }

  QLinear reduced(std::int64_t p) const {
    QLinear out;
    for (const auto& [g, c] : coeffs_) out.add(g, reduce_mod_p(c, p));
    return out;
  }

  friend QLinear operator-(const QLinear& a, const QLinear& b) {
    QLinear out = a;
    for (const auto& [g, c] : b.coeffs_) out.add(g, -c);
    return out;
  }

  friend bool operator==(const QLinear&, const QLinear&) = default;

private:
  std::map<std::string, Quaternion> coeffs_;
};

struct QRelationSet {
  std::vector<std::string> generators;
  std::vector<QLinear> relations; // each relation reads "sum = 0"
  std::int64_t modulus = 0;       // 0 for Z, otherwise the prime p

  friend bool operator==(const QRelationSet&, const QRelationSet&) = default;
};

// "gen: quat; gen: quat = 0", generators in set order.
inline std::string render_q_relation(const QLinear& rel, const std::vector<std::string>& generators) {
  std::string out;
  for (const auto& g : generators) {
    const auto q = rel.coefficient(g);
    if (q.is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += g + ": " + format_quaternion(q);
  }
  return (out.empty() ? std::string("0") : out) + " = 0";
}

inline std::string render_q_relations(const QRelationSet& set) {
  std::string out;
  for (const auto& r : set.relations) out += render_q_relation(r, set.generators) + "\n";
  return out;
}

// Left-coefficient expansion:
//   ur(X,Y) = i X + (i+j) Y     ul(X,Y) = i X + (1-j) Y
//   lr(X,Y) = -i X + (i+j) Y    ll(X,Y) = -i X + (1-j) Y
inline QLinear q_linearize_term(const Term& term) {
  QLinear out;
  auto walk = [&out](auto&& self, const Term& t, const Quaternion& coeff) -> void {
    if (t.is_generator()) {
      out.add(t.name(), coeff);
      return;
    }
    const Quaternion i = Quaternion::i();
    const Quaternion first = (t.op() == Op::ur || t.op() == Op::ul) ? i : -i;
    const Quaternion second = (t.op() == Op::ur || t.op() == Op::lr) ? Quaternion::i() + Quaternion::j()
                                                                     : Quaternion::one() - Quaternion::j();
    self(self, t.left(), coeff * first);
    self(self, t.right(), coeff * second);
  };
  walk(walk, term, Quaternion::one());
  return out;
}

inline QRelationSet q_relations_from_presentation(const Presentation& p) {
  QRelationSet out{p.generators, {}, 0};
  const std::set<std::string> declared(p.generators.begin(), p.generators.end());
  for (const auto& r : p.relations) {
    auto rel = q_linearize_term(r.lhs) - q_linearize_term(r.rhs);
    for (const auto& [g, q] : rel.coefficients())
      if (!declared.count(g)) throw DomainError("relation uses undeclared generator '" + g + "'");
    out.relations.push_back(std::move(rel));
  }
  return out;
}

inline QRelationSet reduce_mod_p(const QRelationSet& set, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  QRelationSet out{set.generators, {}, p};
  for (const auto& r : set.relations) out.relations.push_back(r.reduced(p));
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_p

struct FpMatrix {
  std::int64_t prime = 3;
  Matrix<std::int64_t> entries; // reduced into 0..p-1

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
};

// Matrix of x -> q x in the basis (1, i, j, k): column c holds q * e_c.
inline Matrix<std::int64_t> left_regular(const Quaternion& q) {
  static constexpr Quaternion basis[] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  Matrix<std::int64_t> m(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const auto col = (q * basis[c]).coords();
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = col[r];
  }
  return m;
}

inline FpMatrix reduce_matrix(const Matrix<std::int64_t>& m, std::int64_t p) {
  FpMatrix out{p, Matrix<std::int64_t>(m.rows(), m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.entries(r, c) = mod_p(m(r, c), p);
  return out;
}

// Each coefficient becomes a 4x4 block L(q); 4 rows per relation, 4 columns
// per generator.
inline FpMatrix scalar_restriction(const QRelationSet& set) {
  if (set.modulus == 0) throw DomainError("scalar restriction needs a relation set over Z_p");
  const auto p = set.modulus;
  FpMatrix out{p, Matrix<std::int64_t>(4 * set.relations.size(), 4 * set.generators.size())};
  for (std::size_t r = 0; r < set.relations.size(); ++r)
    for (std::size_t g = 0; g < set.generators.size(); ++g) {
      const auto block = left_regular(set.relations[r].coefficient(set.generators[g]));
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) out.entries(4 * r + a, 4 * g + b) = mod_p(block(a, b), p);
    }
  return out;
}

inline std::int64_t inverse_mod_prime(std::int64_t a, std::int64_t p) {
  // Fermat: a^(p-2)
  std::int64_t result = 1, base = mod_p(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Row rank by Gauss-Jordan elimination over F_p.
inline std::size_t fp_rank(const FpMatrix& input) {
  const auto p = input.prime;
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  auto m = input.entries;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && mod_p(m(pivot, c), p) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const auto inv = inverse_mod_prime(m(rank, c), p);
    for (std::size_t k = c; k < cols; ++k) m(rank, k) = mod_p(m(rank, k) * inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const auto f = mod_p(m(r, c), p);
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) m(r, k) = mod_p(m(r, k) - f * m(rank, k), p);
    }
    ++rank;
  }
  return rank;
}

struct ModuleReport {
  std::size_t rank = 0;
  std::size_t columns = 0; // 4 * #generators
  std::int64_t prime = 3;

  std::size_t dimension() const noexcept { return columns - rank; }
  bool trivial() const noexcept { return rank == columns; }
};

// "nontrivial (rank 8 of 12, dim 4)"
inline std::string render_module_verdict(const ModuleReport& r) {
  return std::string(r.trivial() ? "trivial" : "nontrivial") + " (rank " + std::to_string(r.rank) + " of " +
         std::to_string(r.columns) + ", dim " + std::to_string(r.dimension()) + ")";
}

inline ModuleReport module_report(const QRelationSet& set, std::int64_t prime) {
  const auto reduced = reduce_mod_p(set, prime);
  return {fp_rank(scalar_restriction(reduced)), 4 * set.generators.size(), prime};
}

inline ModuleReport module_is_trivial(const Presentation& p, std::int64_t prime) {
  return module_report(q_relations_from_presentation(p), prime);
}

// ---------------------------------------------------------------------------
// The Kishino knot

// Three generators, three relations, read off phi_u^-1 tau phi_u (a,b) = (d,b)
// and phi_d^-1 tau phi_d (c,a) = (c,d). The second relation uses c ll a as
// produced by the morphism computation.
inline constexpr const char* kishino_presentation_text =
    "# Kishino knot\n"
    "gens a b c\n"
    "rel b = ul(lr(a,b),ur(b,a))\n"
    "rel c = lr(ul(a,c),ll(c,a))\n"
    "rel ll(ur(b,a),lr(a,b)) = ur(ll(c,a),ul(a,c))\n";

// Reference integral relations for the Kishino presentation, taken as ground truth:
//   (-3a + b) - 2ib - 2kb = 0
//   -(a + c) + i(a + c) + k(a + c) = 0
//   (3b - 3c) - 4ia = 0
inline QRelationSet kishino_reference_relations() {
  const Quaternion mix{-1, 1, 0, 1}; // -1 + i + k
  return {{"a", "b", "c"},
          {QLinear{{"a", {-3, 0, 0, 0}}, {"b", {1, -2, 0, -2}}},
           QLinear{{"a", mix}, {"c", mix}},
           QLinear{{"a", {0, -4, 0, 0}}, {"b", {3, 0, 0, 0}}, {"c", {-3, 0, 0, 0}}}},
          0};
}

struct KishinoCertificate {
  Presentation presentation;
  QRelationSet reference;         // over Z
  QRelationSet reduced;           // reference, over Z_p
  std::optional<std::size_t> forcing_relation; // reduced relation u*a = 0 with u a unit
  ModuleReport module;
  QRelationSet linearized;        // generic left-coefficient linearization of `presentation`
  bool linearization_matches = false;
  ModuleReport linearized_module;
};

inline bool invertible_mod_p(const Quaternion& q, std::int64_t p) { return mod_p(norm(q), p) != 0; }

inline KishinoCertificate kishino_certificate(std::int64_t prime = 3) {
  KishinoCertificate cert;
  cert.presentation = parse_presentation(kishino_presentation_text);
  cert.reference = kishino_reference_relations();
  cert.reduced = reduce_mod_p(cert.reference, prime);
  for (std::size_t r = 0; r < cert.reduced.relations.size(); ++r) {
    const auto& coeffs = cert.reduced.relations[r].coefficients();
    if (coeffs.size() == 1 && coeffs.count("a") && invertible_mod_p(coeffs.at("a"), prime)) {
      cert.forcing_relation = r;
      break;
    }
  }
  cert.module = module_report(cert.reference, prime);
  cert.linearized = q_relations_from_presentation(cert.presentation);
  cert.linearization_matches = true;
  for (std::size_t r = 0; r < cert.reference.relations.size(); ++r) {
    const auto& mine = cert.linearized.relations[r];
    const auto& theirs = cert.reference.relations[r];
    if (!(mine == theirs) && !(mine == QLinear{} - theirs)) cert.linearization_matches = false;
  }
  cert.linearized_module = module_report(cert.linearized, prime);
  return cert;
}

inline std::string render_kishino_certificate(const KishinoCertificate& cert) {
  const auto p = std::to_string(cert.module.prime);
  std::string out;
  out += "presentation:\n" + render_presentation(cert.presentation);
  out += "reference relations over Z:\n" + render_q_relations(cert.reference);
  out += "reduced mod " + p + ":\n" + render_q_relations(cert.reduced);
  if (cert.forcing_relation)
    out += "relation " + std::to_string(*cert.forcing_relation + 1) + " has a unit coefficient on a alone, so a = 0\n";
  out += "left-coefficient linearization of the presentation:\n" + render_q_relations(cert.linearized);
  out += std::string("linearization ") + (cert.linearization_matches ? "matches" : "differs from") +
         " the reference relations; its own mod " + p + " module: " +
         render_module_verdict(cert.linearized_module) + "\n";
  out += render_module_verdict(cert.module) + "\n";
  return out;
}

} // namespace bq
