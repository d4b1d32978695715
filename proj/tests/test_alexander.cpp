#include <gtest/gtest.h>

#include "bq/alexander.hpp"
#include "bq/morphism.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bq;

namespace {

using P = LaurentPoly;
using M = LaurentMatrix;
using O = CrossingOrientation;
const P s = P::s(), t = P::t(), si = P::s(-1), ti = P::t(-1);

const auto sg = [](int i) { return BraidLetter::sigma(i, 1); };
const auto sgi = [](int i) { return BraidLetter::sigma(i, -1); };
const auto v = [](int i) { return BraidLetter::nu(i); };

M X(O o) { return crossing_matrix(o); }
M I(std::size_t n) { return M::identity(n); }

} // namespace

TEST(CrossingMatrices, Literal) {
  EXPECT_EQ(X(O::A), (M{{1 - s * t, t}, {s, 0}}));
  EXPECT_EQ(X(O::A_hat), (M{{0, s}, {t, 1 - s * t}}));
  EXPECT_EQ(X(O::B), (M{{0, si}, {ti, 1 - si * ti}}));
  EXPECT_EQ(X(O::B_hat), (M{{1 - si * ti, ti}, {si, 0}}));
  EXPECT_EQ(X(O::C), (M{{0, si}, {t, si - t}}));
  EXPECT_EQ(X(O::C_hat), (M{{si - t, t}, {si, 0}}));
  EXPECT_EQ(X(O::D), (M{{0, s}, {ti, s - ti}}));
  EXPECT_EQ(X(O::D_hat), (M{{s - ti, ti}, {s, 0}}));
  EXPECT_EQ(X(O::V), (M{{0, 1}, {1, 0}}));
}

TEST(CrossingMatrices, Identities) {
  EXPECT_EQ(X(O::A) * X(O::B), I(2));
  EXPECT_EQ(X(O::A_hat) * X(O::B_hat), I(2));
  EXPECT_EQ(X(O::V) * X(O::V), I(2));
  EXPECT_EQ(X(O::A), X(O::V) * X(O::A_hat) * X(O::V));
  EXPECT_EQ(X(O::B), X(O::V) * X(O::B_hat) * X(O::V));
}

TEST(CrossingMatrices, BraidRelations) {
  const auto A1 = direct_sum(X(O::A), I(1)), A2 = direct_sum(I(1), X(O::A));
  const auto V1 = direct_sum(X(O::V), I(1)), V2 = direct_sum(I(1), X(O::V));
  EXPECT_EQ(A1 * A2 * A1, A2 * A1 * A2);
  EXPECT_EQ(V1 * V2 * V1, V2 * V1 * V2);
  EXPECT_EQ(V1 * V2 * A1, A2 * V1 * V2);
}

TEST(BraidMatrix, Up) {
  EXPECT_EQ(braid_matrix_up(BraidWord(2, {sg(1)})), X(O::A));
  EXPECT_EQ(braid_matrix_up(BraidWord(2, {})), I(2));
  EXPECT_EQ(braid_matrix_up(BraidWord(2, {sg(1), sgi(1)})), I(2));
  EXPECT_EQ(braid_matrix_up(BraidWord(3, {sg(2)})), direct_sum(I(1), X(O::A)));
  EXPECT_EQ(braid_matrix_up(BraidWord(2, {v(1), sg(1)})), X(O::A) * X(O::V));
}

TEST(BraidMatrix, Down) {
  EXPECT_EQ(braid_matrix_down(BraidWord(2, {sgi(1)})), X(O::A_hat));
  EXPECT_EQ(braid_matrix_down(BraidWord(2, {sg(1)})), X(O::B_hat));
  EXPECT_EQ(braid_matrix_down(BraidWord(2, {v(1)})), X(O::V));
  EXPECT_EQ(braid_matrix_down(BraidWord(3, {sgi(1)})), direct_sum(I(1), X(O::A_hat)));
  const auto R = reversal_matrix(2);
  EXPECT_EQ(braid_matrix_up(BraidWord(2, {sg(1)})), R * braid_matrix_down(BraidWord(2, {sgi(1)})) * R);
}

TEST(RelationMatrix, FromBraid) {
  EXPECT_EQ(relation_matrix_from_braid(BraidWord(2, {})), M(2, 2));
  EXPECT_EQ(relation_matrix_from_braid(BraidWord(2, {v(1), sg(1)})), (M{{t - 1, 1 - s * t}, {0, s - 1}}));
  const auto A = X(O::A);
  EXPECT_EQ(relation_matrix_from_braid(BraidWord(2, {sg(1), sg(1), sg(1)})), A * A * A - I(2));
}

TEST(RelationMatrix, FromPresentation) {
  EXPECT_EQ(relation_matrix_from_presentation(parse_presentation("gens a b\nrel ur(a,b) = a\nrel lr(b,a) = b")),
            (M{{t - 1, 1 - s * t}, {0, s - 1}}));
  EXPECT_EQ(relation_matrix_from_presentation(parse_presentation("gens a\nrel a = a")), M(1, 1));
  EXPECT_EQ(relation_matrix_from_presentation(parse_presentation("gens a b\nrel ll(a,b) = a")),
            (M{{si - 1, 0}}));
  EXPECT_EQ(relation_matrix_from_presentation(parse_presentation("gens a b\nrel ul(a,b) = b")),
            (M{{ti, -si * ti}}));
  Presentation bad{{"a"}, {{Term::gen("z"), Term::gen("a")}}};
  EXPECT_THROW(relation_matrix_from_presentation(bad), DomainError);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(I(2)), P(1));
  EXPECT_EQ(determinant(X(O::A)), -(s * t));
  EXPECT_EQ(determinant(X(O::B)), -(si * ti));
  EXPECT_EQ(determinant(M(3, 3)), P(0));
  EXPECT_EQ(determinant(M(0, 0)), P(1));
  EXPECT_THROW(determinant(M(2, 3)), DomainError);
  // Needs a row swap: zero in the top-left corner.
  EXPECT_EQ(determinant(M{{0, 1, 0}, {1, 0, 0}, {0, 0, s}}), -s);
}

TEST(Determinant, KnotPairs) {
  const auto expected = normalize_gap(fixtures::knot_pair_determinant());
  EXPECT_EQ(normalize_gap(determinant(fixtures::knot_pair_matrix_1())), expected);
  EXPECT_EQ(normalize_gap(determinant(fixtures::knot_pair_matrix_2())), expected);
  EXPECT_EQ(determinant(fixtures::knot_pair_matrix_1()), oracle::cofactor_determinant(fixtures::knot_pair_matrix_1()));
  EXPECT_EQ(determinant(fixtures::knot_pair_matrix_2()), oracle::cofactor_determinant(fixtures::knot_pair_matrix_2()));
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(BraidWord(2, {v(1), sg(1)})), 1 - s - t + s * t);
  EXPECT_EQ(format_laurent(gap(BraidWord(2, {v(1), sg(1)}))), "1 - s - t + s*t");
  EXPECT_TRUE(gap(BraidWord(2, {sg(1), sg(1), sg(1)})).is_zero());
  EXPECT_TRUE(gap(BraidWord(1, {})).is_zero());
  EXPECT_EQ(gap(parse_presentation("gens a b\nrel ur(a,b) = a\nrel lr(b,a) = b")), 1 - s - t + s * t);
  EXPECT_THROW(gap(parse_presentation("gens a b\nrel ur(a,b) = a")), DomainError);
}

// ---------------------------------------------------------------------------

class RandomWords : public ::testing::TestWithParam<std::uint64_t> {
protected:
  BraidWord word() const {
    const auto seed = GetParam();
    return random_braid(1 + static_cast<int>(seed % 4), static_cast<int>(seed % 13), seed + 500);
  }
};

TEST_P(RandomWords, BareissMatchesCofactor) {
  const auto m = relation_matrix_from_braid(word());
  EXPECT_EQ(determinant(m), oracle::cofactor_determinant(m));
}

TEST_P(RandomWords, UpIsReversalConjugateOfDownInverse) {
  const auto w = word();
  const auto R = reversal_matrix(static_cast<std::size_t>(w.strands()));
  EXPECT_EQ(braid_matrix_up(w), R * braid_matrix_down(invert_braid(w)) * R);
}

TEST_P(RandomWords, PresentationLinearizationMatchesBraidMatrix) {
  const auto w = word();
  EXPECT_EQ(relation_matrix_from_presentation(presentation_from_braid(w)), relation_matrix_from_braid(w));
}

TEST_P(RandomWords, GapInvariantUnderEquivalences) {
  const auto w = word();
  const auto g = gap(w);
  EXPECT_EQ(gap(invert_braid(w)), g);
  EXPECT_EQ(gap(vertical_mirror(w)), g);
  EXPECT_EQ(gap(ad_inversion(w)), g);
  EXPECT_EQ(gap(free_reduce(w)), g);
  EXPECT_EQ(gap(stabilize(w, 1)), g);
  EXPECT_EQ(gap(stabilize(w, -1)), g);
  if (w.strands() > 1) {
    EXPECT_EQ(gap(conjugate(w, BraidLetter::sigma(1, -1))), g);
    EXPECT_EQ(gap(conjugate(w, BraidLetter::nu(w.strands() - 1))), g);
  }
  for (const auto& m : applicable_relator_moves(w)) EXPECT_EQ(gap(apply_relator_move(w, m)), g);
  EXPECT_EQ(gap(presentation_from_braid_down(invert_braid(w))), g);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomWords, ::testing::Range<std::uint64_t>(0, 50));
