#pragma once

// Seeded random walks through moves that preserve the biquandle of the
// closure, and the invariance check of G_K along such a walk.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bq/alexander.hpp"
#include "bq/braid.hpp"

namespace bq {

struct AppliedMove {
  std::string description; // "conjugate s2", "relator mixed@3 backward", ...
  BraidWord result;
};

// Stabilization is skipped once the word has this many strands.
inline constexpr int max_walk_strands = 5;

inline const char* relator_family_name(RelatorFamily f) noexcept {
  switch (f) {
  case RelatorFamily::braid: return "braid";
  case RelatorFamily::virtual_braid: return "virtual";
  case RelatorFamily::mixed: return "mixed";
  case RelatorFamily::commute: return "commute";
  }
  return "?";
}

inline std::string describe_relator_move(const RelatorMove& m) {
  return std::string("relator ") + relator_family_name(m.family) + "@" + std::to_string(m.position) +
         (m.direction == MoveDirection::forward ? " forward" : " backward");
}

// One move drawn uniformly from those available on w.
inline AppliedMove random_move(const BraidWord& w, std::mt19937_64& rng) {
  enum Kind { relator, conj, stab, destab, reduce, mirror, ad };
  std::vector<Kind> kinds;
  const auto relators = applicable_relator_moves(w);
  if (!relators.empty()) kinds.push_back(relator);
  if (w.strands() >= 2) kinds.push_back(conj);
  if (w.strands() < max_walk_strands) kinds.push_back(stab);
  if (can_destabilize(w)) kinds.push_back(destab);
  kinds.insert(kinds.end(), {reduce, mirror, ad});

  switch (kinds[rng() % kinds.size()]) {
  case relator: {
    const auto& m = relators[rng() % relators.size()];
    return {describe_relator_move(m), apply_relator_move(w, m)};
  }
  case conj: {
    const auto by = random_letter(w.strands(), rng);
    return {"conjugate " + render_letter(by), conjugate(w, by)};
  }
  case stab: {
    const int sign = rng() % 2 == 0 ? 1 : -1;
    return {"stabilize " + std::to_string(sign), stabilize(w, sign)};
  }
  case destab: return {"destabilize", destabilize(w)};
  case reduce: return {"free_reduce", free_reduce(w)};
  case mirror: return {"mirror", vertical_mirror(w)};
  case ad: return {"ad_inversion", ad_inversion(w)};
  }
  throw DomainError("unreachable move kind");
}

struct InvarianceFailure {
  std::size_t step = 0; // 1-based
  std::string move;
  BraidWord before, after;
  LaurentPoly expected, got;
};

struct InvarianceResult {
  LaurentPoly baseline;
  std::size_t moves = 0;
  std::optional<InvarianceFailure> failure;
};

// Sequential walk of `trials` moves; the word is freely reduced after every
// move to keep its length bounded.
inline InvarianceResult check_gap_invariance(const BraidWord& start, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvarianceResult out;
  out.baseline = gap(start);
  BraidWord w = start;
  for (std::size_t step = 1; step <= trials; ++step) {
    auto mv = random_move(w, rng);
    auto next = free_reduce(mv.result);
    auto g = gap(next);
    ++out.moves;
    if (!(g == out.baseline)) {
      out.failure = InvarianceFailure{step, mv.description, w, next, out.baseline, g};
      return out;
    }
    w = std::move(next);
  }
  return out;
}

} // namespace bq
