#include <gtest/gtest.h>

#include "bq/term.hpp"

using namespace bq;

namespace {
const Term a = Term::gen("a"), b = Term::gen("b"), c = Term::gen("c");
}

TEST(Term, StructuralEquality) {
  EXPECT_EQ(ur(a, b), ur(a, b));
  EXPECT_FALSE(ur(a, b) == ur(b, a));
  EXPECT_FALSE(ur(a, b) == lr(a, b));
  EXPECT_FALSE(a == b);
  EXPECT_EQ(render_term(ll(ur(a, b), c)), "ll(ur(a,b),c)");
}

TEST(Presentation, ParsesExamples) {
  const auto p = parse_presentation("gens a b\nrel ur(a,b) = a\nrel lr(b,a) = b");
  EXPECT_EQ(p.generators, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(p.relations.size(), 2u);
  EXPECT_EQ(p.relations[0], (Relation{ur(a, b), a}));
  EXPECT_EQ(p.relations[1], (Relation{lr(b, a), b}));

  const auto q = parse_presentation("gens a\n");
  EXPECT_EQ(q.generators.size(), 1u);
  EXPECT_TRUE(q.relations.empty());
}

TEST(Presentation, CommentsAndWhitespace) {
  const auto p = parse_presentation("# header\n  gens x1 y  # two\n\nrel  ul( x1 , y )=ll(y,x1) \n");
  EXPECT_EQ(p.relations.at(0).lhs, ul(Term::gen("x1"), Term::gen("y")));
  EXPECT_EQ(render_presentation(p), "gens x1 y\nrel ul(x1,y) = ll(y,x1)\n");
}

TEST(Presentation, Rejects) {
  EXPECT_THROW(parse_presentation("gens a\nrel ur(a,c) = a"), ParseError);
  EXPECT_THROW(parse_presentation("rel a = a"), ParseError);
  EXPECT_THROW(parse_presentation(""), ParseError);
  EXPECT_THROW(parse_presentation("gens a a"), ParseError);
  EXPECT_THROW(parse_presentation("gens a\ngens b"), ParseError);
  EXPECT_THROW(parse_presentation("gens A"), ParseError);
  EXPECT_THROW(parse_presentation("gens a\nrel xx(a,a) = a"), ParseError);
  EXPECT_THROW(parse_presentation("gens a\nrel ur(a,a) a"), ParseError);
  EXPECT_THROW(parse_presentation("gens a\nrel ur(a) = a"), ParseError);
  EXPECT_THROW(parse_presentation("gens a\nrel a = a a"), ParseError);
  EXPECT_THROW(parse_presentation("gens a\nfoo a"), ParseError);
}

TEST(Presentation, RenderParseRoundTrip) {
  const std::string text = "gens a b c\nrel b = ul(lr(a,b),ur(b,a))\nrel ll(ur(b,a),lr(a,b)) = ur(ll(c,a),ul(a,c))\n";
  EXPECT_EQ(render_presentation(parse_presentation(text)), text);
}

TEST(Renaming, Examples) {
  const Presentation empty_a{{"a"}, {}};
  EXPECT_TRUE(presentations_equal_up_to_renaming(empty_a, empty_a));

  const Presentation one{{"a", "b"}, {{ur(a, b), a}}};
  const Presentation none{{"a", "b"}, {}};
  EXPECT_FALSE(presentations_equal_up_to_renaming(one, none));

  // Renaming a <-> b and flipping a relation.
  const Presentation p{{"a", "b"}, {{ur(a, b), a}, {lr(b, a), b}}};
  const Presentation q{{"x", "y"}, {{Term::gen("x"), lr(Term::gen("x"), Term::gen("y"))},
                                    {ur(Term::gen("y"), Term::gen("x")), Term::gen("y")}}};
  EXPECT_TRUE(presentations_equal_up_to_renaming(p, q));

  const Presentation r{{"x", "y"}, {{ur(Term::gen("x"), Term::gen("y")), Term::gen("y")},
                                    {lr(Term::gen("y"), Term::gen("x")), Term::gen("y")}}};
  EXPECT_FALSE(presentations_equal_up_to_renaming(p, r));
}

TEST(Renaming, MultisetNotSet) {
  const Presentation twice{{"a"}, {{ur(a, a), a}, {ur(a, a), a}}};
  const Presentation mixed{{"a"}, {{ur(a, a), a}, {lr(a, a), a}}};
  EXPECT_TRUE(presentations_equal_up_to_renaming(twice, twice));
  EXPECT_FALSE(presentations_equal_up_to_renaming(twice, mixed));
}

TEST(Renaming, GuardsLargeInputs) {
  Presentation big;
  for (int k = 0; k < 9; ++k) big.generators.push_back("g" + std::to_string(k));
  EXPECT_THROW(presentations_equal_up_to_renaming(big, big), DomainError);
}
