#include <gtest/gtest.h>

#include <set>

#include "bq/braid.hpp"

using namespace bq;

namespace {

const auto s = [](int i) { return BraidLetter::sigma(i, 1); };
const auto si = [](int i) { return BraidLetter::sigma(i, -1); };
const auto v = [](int i) { return BraidLetter::nu(i); };

BraidWord W(int n, std::vector<BraidLetter> l) { return BraidWord(n, std::move(l)); }

} // namespace

TEST(BraidText, ParsesLetters) {
  EXPECT_EQ(parse_braid_word("n=2; s1 s1 s1"), W(2, {s(1), s(1), s(1)}));
  EXPECT_EQ(parse_braid_word("n=2; v1 s1"), W(2, {v(1), s(1)}));
  EXPECT_EQ(parse_braid_word("  n=3;-s2   v1 "), W(3, {si(2), v(1)}));
  EXPECT_EQ(parse_braid_word("n=1;"), W(1, {}));
}

TEST(BraidText, RejectsBadInput) {
  EXPECT_THROW(parse_braid_word("n=2; s2"), ParseError);
  EXPECT_THROW(parse_braid_word("n=2; s0"), ParseError);
  EXPECT_THROW(parse_braid_word("n=0;"), ParseError);
  EXPECT_THROW(parse_braid_word("n=2; x1"), ParseError);
  EXPECT_THROW(parse_braid_word("n=2; s1x"), ParseError);
  EXPECT_THROW(parse_braid_word("n=2 s1"), ParseError);
  EXPECT_THROW(parse_braid_word("s1"), ParseError);
  EXPECT_THROW(parse_braid_word("n=2; -v1"), ParseError);
}

TEST(BraidText, Renders) {
  EXPECT_EQ(render_braid_word(W(2, {})), "n=2;");
  EXPECT_EQ(render_braid_word(W(3, {si(2), v(1)})), "n=3; -s2 v1");
  EXPECT_EQ(render_braid_word(W(2, {s(1), s(1), s(1)})), "n=2; s1 s1 s1");
}

TEST(BraidWord, ConstructorValidates) {
  EXPECT_THROW(W(2, {s(2)}), DomainError);
  EXPECT_THROW(W(0, {}), DomainError);
  EXPECT_THROW(W(3, {BraidLetter{LetterKind::virtual_crossing, 1, -1}}), DomainError);
}

TEST(BraidGroup, Invert) {
  EXPECT_EQ(invert_braid(W(2, {s(1), v(1)})), W(2, {v(1), si(1)}));
  EXPECT_EQ(invert_braid(W(2, {})), W(2, {}));
  EXPECT_EQ(invert_braid(W(3, {s(2), si(1)})), W(3, {s(1), si(2)}));
}

TEST(BraidGroup, FreeReduce) {
  EXPECT_EQ(free_reduce(W(2, {s(1), si(1)})), W(2, {}));
  EXPECT_EQ(free_reduce(W(2, {v(1), v(1)})), W(2, {}));
  EXPECT_EQ(free_reduce(W(3, {s(1), v(2), v(2), s(1)})), W(3, {s(1), s(1)}));
  EXPECT_EQ(free_reduce(W(3, {s(1), s(2), si(2), v(1), v(1), si(1), s(2)})), W(3, {s(2)}));
}

TEST(BraidMoves, RelatorExamples) {
  EXPECT_EQ(apply_relator_move(W(3, {s(1), s(2), s(1)}), {RelatorFamily::braid, 0, MoveDirection::forward}),
            W(3, {s(2), s(1), s(2)}));
  EXPECT_EQ(apply_relator_move(W(3, {v(1), v(2), v(1)}),
                               {RelatorFamily::virtual_braid, 0, MoveDirection::forward}),
            W(3, {v(2), v(1), v(2)}));
  EXPECT_EQ(apply_relator_move(W(3, {s(1), v(2), v(1)}), {RelatorFamily::mixed, 0, MoveDirection::forward}),
            W(3, {v(2), v(1), s(2)}));
  EXPECT_EQ(apply_relator_move(W(3, {v(2), v(1), si(2)}), {RelatorFamily::mixed, 0, MoveDirection::backward}),
            W(3, {si(1), v(2), v(1)}));
  EXPECT_EQ(apply_relator_move(W(4, {s(1), v(3)}), {RelatorFamily::commute, 0, MoveDirection::forward}),
            W(4, {v(3), s(1)}));
}

TEST(BraidMoves, RelatorMismatchThrows) {
  EXPECT_THROW(apply_relator_move(W(3, {s(1), s(2), si(1)}), {RelatorFamily::braid, 0, MoveDirection::forward}),
               DomainError);
  EXPECT_THROW(apply_relator_move(W(3, {s(1), s(2)}), {RelatorFamily::commute, 0, MoveDirection::forward}),
               DomainError);
  EXPECT_THROW(apply_relator_move(W(3, {s(1)}), {RelatorFamily::braid, 0, MoveDirection::forward}),
               DomainError);
}

TEST(BraidMoves, Markov) {
  EXPECT_EQ(conjugate(W(2, {s(1)}), s(1)), W(2, {s(1), s(1), si(1)}));
  EXPECT_EQ(stabilize(W(2, {s(1), s(1), s(1)}), 1), W(3, {s(1), s(1), s(1), s(2)}));
  EXPECT_EQ(free_reduce(conjugate(W(2, {}), v(1))), W(2, {}));
  EXPECT_EQ(markov_move(W(2, {s(1)}), Conjugate{v(1)}), W(2, {v(1), s(1), v(1)}));
  EXPECT_EQ(markov_move(W(3, {s(1), si(2)}), Destabilize{}), W(2, {s(1)}));
  EXPECT_THROW(destabilize(W(3, {s(2), s(1), si(2)})), DomainError);
  EXPECT_THROW(destabilize(W(3, {v(2)})), DomainError);
  EXPECT_THROW(stabilize(W(2, {}), 0), DomainError);
}

TEST(BraidMoves, MirrorAndAd) {
  EXPECT_EQ(vertical_mirror(W(2, {s(1)})), W(2, {si(1)}));
  EXPECT_EQ(vertical_mirror(W(2, {v(1), s(1)})), W(2, {si(1), v(1)}));
  EXPECT_EQ(vertical_mirror(W(2, {})), W(2, {}));

  EXPECT_EQ(ad_inversion(W(2, {s(1)})), W(2, {v(1), si(1), v(1)}));
  EXPECT_EQ(ad_inversion(W(2, {v(1)})), W(2, {v(1)}));
  EXPECT_EQ(free_reduce(ad_inversion(W(2, {s(1), s(1)}))), W(2, {v(1), si(1), si(1), v(1)}));
  // Orientation reversal rotates the braid: letter order reverses and index i becomes n - i.
  EXPECT_EQ(ad_inversion(W(3, {s(1), v(1), si(2)})),
            W(3, {v(1), s(1), v(1), v(2), v(2), si(2), v(2)}));
}

TEST(BraidRandom, Deterministic) {
  EXPECT_EQ(random_braid(1, 0, 7), W(1, {}));
  const auto w = random_braid(2, 5, 1);
  EXPECT_EQ(w.length(), 5u);
  EXPECT_EQ(w.strands(), 2);
  EXPECT_EQ(w, random_braid(2, 5, 1));
  EXPECT_THROW(random_braid(0, 1, 1), DomainError);
  EXPECT_THROW(random_braid(2, -1, 1), DomainError);
}

TEST(BraidRandom, UsesWholeAlphabet) {
  std::set<std::pair<int, int>> seen; // (index, exponent or 0 for virtual)
  const auto w = random_braid(4, 400, 11);
  for (const auto& l : w.letters()) seen.insert({l.index, l.is_virtual() ? 0 : l.exponent});
  EXPECT_EQ(seen.size(), 9u);
}

// ---------------------------------------------------------------------------
// Properties over seeded random words

class RandomWords : public ::testing::TestWithParam<std::uint64_t> {
protected:
  BraidWord word() const {
    const auto seed = GetParam();
    return random_braid(1 + static_cast<int>(seed % 4), static_cast<int>(seed % 13), seed);
  }
};

TEST_P(RandomWords, RenderParseRoundTrip) {
  const auto w = word();
  EXPECT_EQ(parse_braid_word(render_braid_word(w)), w);
  EXPECT_EQ(render_braid_word(parse_braid_word(render_braid_word(w))), render_braid_word(w));
}

TEST_P(RandomWords, FreeReduceIdempotentAndShrinking) {
  const auto w = word();
  const auto r = free_reduce(w);
  EXPECT_EQ(free_reduce(r), r);
  EXPECT_LE(r.length(), w.length());
}

TEST_P(RandomWords, InverseLaws) {
  const auto w = word();
  EXPECT_EQ(invert_braid(invert_braid(w)), w);
  EXPECT_TRUE(free_reduce(concat(w, invert_braid(w))).empty());
  EXPECT_TRUE(free_reduce(concat(invert_braid(w), w)).empty());
}

TEST_P(RandomWords, RelatorMovesAreLocalAndReversible) {
  const auto w = word();
  for (const auto& m : applicable_relator_moves(w)) {
    const auto out = apply_relator_move(w, m);
    ASSERT_EQ(out.length(), w.length());
    const std::size_t width = m.family == RelatorFamily::commute ? 2 : 3;
    for (std::size_t k = 0; k < w.length(); ++k) {
      if (k < m.position || k >= m.position + width) {
        EXPECT_EQ(out.letters()[k], w.letters()[k]);
      }
    }
    auto back = m;
    if (m.family != RelatorFamily::commute)
      back.direction = m.direction == MoveDirection::forward ? MoveDirection::backward : MoveDirection::forward;
    EXPECT_EQ(apply_relator_move(out, back), w);
  }
}

TEST_P(RandomWords, AdInversionIsInvolutionUpToReduction) {
  const auto w = word();
  EXPECT_EQ(free_reduce(ad_inversion(ad_inversion(w))), free_reduce(w));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomWords, ::testing::Range<std::uint64_t>(0, 60));
