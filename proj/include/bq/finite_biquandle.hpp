#pragma once

// Finite biquandles given by operation tables, and an exhaustive axiom checker.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bq/error.hpp"
#include "bq/quaternion.hpp"
#include "bq/term.hpp"

namespace bq {

class FiniteBiquandle {
public:
  using Element = std::uint32_t;
  using Table = std::vector<Element>; // row-major m x m, entry (a,b) = a op b

  FiniteBiquandle(std::size_t size, std::array<Table, 4> tables, std::vector<std::string> labels = {})
      : size_(size), tables_(std::move(tables)), labels_(std::move(labels)) {
    if (size_ == 0) throw DomainError("finite biquandle needs a non-empty carrier");
    for (const auto& t : tables_) {
      if (t.size() != size_ * size_) throw DomainError("operation table has wrong shape");
      for (auto e : t)
        if (e >= size_) throw DomainError("operation table entry out of range");
    }
    if (!labels_.empty() && labels_.size() != size_) throw DomainError("label count differs from size");
  }

  std::size_t size() const noexcept { return size_; }

  Element apply(Op op, Element a, Element b) const noexcept {
    return tables_[static_cast<std::size_t>(op)][a * size_ + b];
  }
  Element ur(Element a, Element b) const noexcept { return apply(Op::ur, a, b); }
  Element lr(Element a, Element b) const noexcept { return apply(Op::lr, a, b); }
  Element ul(Element a, Element b) const noexcept { return apply(Op::ul, a, b); }
  Element ll(Element a, Element b) const noexcept { return apply(Op::ll, a, b); }

  void set(Op op, Element a, Element b, Element value) {
    if (a >= size_ || b >= size_ || value >= size_) throw DomainError("table index out of range");
    tables_[static_cast<std::size_t>(op)][a * size_ + b] = value;
  }

  const Table& table(Op op) const noexcept { return tables_[static_cast<std::size_t>(op)]; }

  std::string label(Element e) const { return labels_.empty() ? std::to_string(e) : labels_[e]; }

private:
  std::size_t size_;
  std::array<Table, 4> tables_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Constructions

// Z_m with a ur b = ta + (1-st)b, a lr b = sa, a ul b = a/t + (1 - 1/(st))b, a ll b = a/s.
inline FiniteBiquandle finite_alexander_biquandle(std::int64_t m, std::int64_t s, std::int64_t t) {
  if (m < 1) throw DomainError("modulus must be positive");
  auto inverse_mod = [m](std::int64_t u, const char* what) {
    u = mod_p(u, m);
    for (std::int64_t v = 0; v < m; ++v)
      if (mod_p(u * v, m) == 1 % m) return v;
    throw DomainError(std::string(what) + " is not a unit modulo " + std::to_string(m));
  };
  const auto si = inverse_mod(s, "s");
  const auto ti = inverse_mod(t, "t");
  const auto n = static_cast<std::size_t>(m);
  std::array<FiniteBiquandle::Table, 4> tables;
  for (auto& tab : tables) tab.resize(n * n);
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; b < m; ++b) {
      const auto idx = static_cast<std::size_t>(a * m + b);
      tables[0][idx] = static_cast<FiniteBiquandle::Element>(mod_p(t * a + (1 - s * t) * b, m));
      tables[1][idx] = static_cast<FiniteBiquandle::Element>(mod_p(s * a, m));
      tables[2][idx] = static_cast<FiniteBiquandle::Element>(mod_p(ti * a + (1 - si * ti) * b, m));
      tables[3][idx] = static_cast<FiniteBiquandle::Element>(mod_p(si * a, m));
    }
  return FiniteBiquandle(n, std::move(tables));
}

// Element index of a quaternion with coefficients in 0..p-1: w + p x + p^2 y + p^3 z.
inline FiniteBiquandle::Element quaternion_index(const Quaternion& q, std::int64_t p) {
  const auto r = reduce_mod_p(q, p);
  return static_cast<FiniteBiquandle::Element>(r.w + p * (r.x + p * (r.y + p * r.z)));
}

inline Quaternion quaternion_at(FiniteBiquandle::Element e, std::int64_t p) {
  std::int64_t v = e;
  Quaternion q;
  q.w = v % p, v /= p;
  q.x = v % p, v /= p;
  q.y = v % p, v /= p;
  q.z = v % p;
  return q;
}

// The quaternionic rules with left coefficients over H(Z_p):
//   a ur b = i a + (i+j) b     a ul b = i a + (1-j) b
//   a lr b = -i a + (i+j) b    a ll b = -i a + (1-j) b
inline FiniteBiquandle finite_quaternionic_biquandle(std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const std::size_t n = static_cast<std::size_t>(p * p * p * p);
  const Quaternion i = Quaternion::i();
  const Quaternion ipj = Quaternion::i() + Quaternion::j();
  const Quaternion omj = Quaternion::one() - Quaternion::j();
  std::array<FiniteBiquandle::Table, 4> tables;
  for (auto& tab : tables) tab.resize(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto qa = quaternion_at(static_cast<FiniteBiquandle::Element>(a), p);
    labels[a] = "(" + format_quaternion(qa) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const auto qb = quaternion_at(static_cast<FiniteBiquandle::Element>(b), p);
      const auto idx = a * n + b;
      tables[0][idx] = quaternion_index(i * qa + ipj * qb, p);
      tables[1][idx] = quaternion_index(-i * qa + ipj * qb, p);
      tables[2][idx] = quaternion_index(i * qa + omj * qb, p);
      tables[3][idx] = quaternion_index(-i * qa + omj * qb, p);
    }
  }
  return FiniteBiquandle(n, std::move(tables), std::move(labels));
}

// JSON table file: {"size": m, "ur": [[..]], "lr": .., "ul": .., "ll": .., "labels": [..]}
inline FiniteBiquandle parse_finite_biquandle_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table file: ") + e.what());
  }
  try {
    const auto m = j.at("size").get<std::size_t>();
    std::array<FiniteBiquandle::Table, 4> tables;
    for (Op op : all_ops) {
      const auto rows = j.at(op_name(op)).get<std::vector<std::vector<std::int64_t>>>();
      if (rows.size() != m) throw ParseError(std::string("table '") + op_name(op) + "' needs " +
                                             std::to_string(m) + " rows");
      auto& tab = tables[static_cast<std::size_t>(op)];
      for (const auto& row : rows) {
        if (row.size() != m) throw ParseError(std::string("table '") + op_name(op) + "' row has wrong length");
        for (auto e : row) {
          if (e < 0 || static_cast<std::size_t>(e) >= m)
            throw ParseError(std::string("table '") + op_name(op) + "' entry " + std::to_string(e) +
                             " out of range");
          tab.push_back(static_cast<FiniteBiquandle::Element>(e));
        }
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteBiquandle(m, std::move(tables), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table file: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("table file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomResult {
  std::string name; // "axiom3", "axiom4.lr", ...
  bool passed = true;
  std::string counterexample;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  }

  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

// One line per result: "axiom<k>[.variant]: pass|fail [counterexample ...]".
inline std::string render_axiom_report(const AxiomReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += r.name + ": " + (r.passed ? "pass" : "fail");
    if (!r.passed) out += " counterexample " + r.counterexample;
    out += '\n';
  }
  return out;
}

struct AxiomOptions {
  // Axiom 5 is cubic in the carrier size; above this it only runs when forced.
  std::size_t max_axiom5_size = 100;
  bool force = false;
};

namespace detail {

using E = FiniteBiquandle::Element;

// The biquandle seen through a possible ur<->ul, lr<->ll swap (the left/right variant).
struct OpsView {
  const FiniteBiquandle& B;
  bool swapped;
  E ur(E a, E b) const { return swapped ? B.ul(a, b) : B.ur(a, b); }
  E lr(E a, E b) const { return swapped ? B.ll(a, b) : B.lr(a, b); }
  E ul(E a, E b) const { return swapped ? B.ur(a, b) : B.ul(a, b); }
  E ll(E a, E b) const { return swapped ? B.lr(a, b) : B.ll(a, b); }
};

inline std::string variant_name(int k, bool swapped) {
  return "axiom" + std::to_string(k) + (swapped ? ".lr" : "");
}

// For every a there is x with (a ur x) lr a = a.
inline AxiomResult check_axiom1(const OpsView& v) {
  AxiomResult r{variant_name(1, v.swapped), true, {}};
  const auto m = static_cast<E>(v.B.size());
  for (E a = 0; a < m; ++a) {
    bool found = false;
    for (E x = 0; x < m && !found; ++x) found = v.lr(v.ur(a, x), a) == a;
    if (!found) return {r.name, false, "a=" + v.B.label(a) + " (no witness x)"};
  }
  return r;
}

// For every a there is x with x = a ll x and a = x ul a.
inline AxiomResult check_axiom2(const OpsView& v) {
  AxiomResult r{variant_name(2, v.swapped), true, {}};
  const auto m = static_cast<E>(v.B.size());
  for (E a = 0; a < m; ++a) {
    bool found = false;
    for (E x = 0; x < m && !found; ++x) found = v.ll(a, x) == x && v.ul(x, a) == a;
    if (!found) return {r.name, false, "a=" + v.B.label(a) + " (no witness x)"};
  }
  return r;
}

// a = (a lr b) ll (b ur a) = (a ur b) ul (b lr a) = (a ul b) ur (b ll a) = (a ll b) lr (b ul a)
inline AxiomResult check_axiom3(const FiniteBiquandle& B) {
  AxiomResult r{"axiom3", true, {}};
  const auto m = static_cast<E>(B.size());
  for (E a = 0; a < m; ++a)
    for (E b = 0; b < m; ++b) {
      const E sides[4] = {B.ll(B.lr(a, b), B.ur(b, a)), B.ul(B.ur(a, b), B.lr(b, a)),
                          B.ur(B.ul(a, b), B.ll(b, a)), B.lr(B.ll(a, b), B.ul(b, a))};
      for (int eq = 0; eq < 4; ++eq)
        if (sides[eq] != a)
          return {r.name, false,
                  "eq=" + std::to_string(eq + 1) + " a=" + B.label(a) + " b=" + B.label(b)};
    }
  return r;
}

// For all a, b there is x with x = a ur (b ll x), a = x ul b and b = (b ll x) lr a.
// The three conditions must hold for one and the same x.
inline AxiomResult check_axiom4(const OpsView& v) {
  AxiomResult r{variant_name(4, v.swapped), true, {}};
  const auto m = static_cast<E>(v.B.size());
  for (E a = 0; a < m; ++a)
    for (E b = 0; b < m; ++b) {
      bool found = false;
      for (E x = 0; x < m && !found; ++x) {
        const E bx = v.ll(b, x);
        found = v.ur(a, bx) == x && v.ul(x, b) == a && v.lr(bx, a) == b;
      }
      if (!found) return {r.name, false, "a=" + v.B.label(a) + " b=" + v.B.label(b) + " (no witness x)"};
    }
  return r;
}

//   (a ur b) ur c = (a ur (c lr b)) ur (b ur c)
//   (a lr b) lr c = (a lr (c ur b)) lr (b lr c)
//   (a lr b) ur (c lr (b ur a)) = (a ur c) lr (b ur (c lr a))
inline AxiomResult check_axiom5(const OpsView& v) {
  AxiomResult r{variant_name(5, v.swapped), true, {}};
  const auto m = static_cast<E>(v.B.size());
  for (E a = 0; a < m; ++a)
    for (E b = 0; b < m; ++b) {
      const E ab_ur = v.ur(a, b), ab_lr = v.lr(a, b), ba_ur = v.ur(b, a);
      for (E c = 0; c < m; ++c) {
        int bad = 0;
        if (v.ur(ab_ur, c) != v.ur(v.ur(a, v.lr(c, b)), v.ur(b, c)))
          bad = 1;
        else if (v.lr(ab_lr, c) != v.lr(v.lr(a, v.ur(c, b)), v.lr(b, c)))
          bad = 2;
        else if (v.ur(ab_lr, v.lr(c, ba_ur)) != v.lr(v.ur(a, c), v.ur(b, v.lr(c, a))))
          bad = 3;
        if (bad)
          return {r.name, false,
                  "eq=" + std::to_string(bad) + " a=" + v.B.label(a) + " b=" + v.B.label(b) +
                      " c=" + v.B.label(c)};
      }
    }
  return r;
}

} // namespace detail

inline AxiomReport check_axioms(const FiniteBiquandle& B, const AxiomOptions& opts = {}) {
  if (B.size() > opts.max_axiom5_size && !opts.force)
    throw DomainError("carrier of " + std::to_string(B.size()) + " elements exceeds the axiom-5 limit of " +
                      std::to_string(opts.max_axiom5_size) + "; force to run anyway");
  const detail::OpsView plain{B, false};
  const detail::OpsView swapped{B, true};
  AxiomReport report;
  report.results.push_back(detail::check_axiom1(plain));
  report.results.push_back(detail::check_axiom1(swapped));
  report.results.push_back(detail::check_axiom2(plain));
  report.results.push_back(detail::check_axiom2(swapped));
  report.results.push_back(detail::check_axiom3(B));
  report.results.push_back(detail::check_axiom4(plain));
  report.results.push_back(detail::check_axiom4(swapped));
  report.results.push_back(detail::check_axiom5(plain));
  report.results.push_back(detail::check_axiom5(swapped));
  return report;
}

} // namespace bq
