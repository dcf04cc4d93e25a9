#include "support/testkit.hpp"

#include "clasp/errors.hpp"
#include "clasp/freegroup.hpp"
#include "clasp/lie.hpp"
#include "clasp/magnus.hpp"
#include "clasp/solvable.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace clasp;

namespace {

Word random_word(std::mt19937& rng, int rank, int length) {
  std::vector<Letter> ls;
  for (int i = 0; i < length; ++i)
    ls.push_back({1 + static_cast<int>(rng() % rank), rng() % 2 ? 1 : -1});
  return Word::from_letters(ls);
}

// Straight product of the factor series, independent of MagnusSeries.
NCPolynomial magnus_oracle(const Word& w, int cap) {
  NCPolynomial acc{{Monomial{}, Rational(1)}};
  for (const auto& l : w.letters()) {
    NCPolynomial factor{{Monomial{}, Rational(1)}};
    for (int k = 1; k <= cap; ++k) {
      if (l.exponent > 0 && k > 1) break;
      factor[Monomial(static_cast<std::size_t>(k), l.generator)] = Rational(l.exponent > 0 || k % 2 == 0 ? 1 : -1);
    }
    NCPolynomial next;
    for (const auto& [a, ca] : acc)
      for (const auto& [b, cb] : factor) {
        if (a.size() + b.size() > static_cast<std::size_t>(cap)) continue;
        Monomial ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        next[ab] += ca * cb;
      }
    acc.clear();
    for (auto& [m, c] : next)
      if (!c.is_zero()) acc.emplace(m, c);
  }
  return acc;
}

// Fox derivative in Z[F] by the product rule, then pushed to Z[F/F^(level)].
GroupRing fox_oracle(const Word& w, int i, int level, int rank) {
  GroupRing out(rank, level);
  std::vector<Letter> prefix;
  for (const auto& l : w.letters()) {
    if (l.generator == i && l.exponent > 0)
      out.add(SolvableElement::of(Word::from_letters(prefix), rank, level), 1);
    prefix.push_back(l);
    if (l.generator == i && l.exponent < 0)
      out.add(SolvableElement::of(Word::from_letters(prefix), rank, level), -1);
  }
  return out;
}

}  // namespace

TEST(Word, ParseGrammar) {
  EXPECT_EQ(parse_word("[x1,x2]").to_string(), "x1 x2 x1^-1 x2^-1");
  EXPECT_EQ(parse_word("x1^3 x1^-2").to_string(), "x1");
  EXPECT_EQ(parse_word("(x1 x2)^-1").to_string(), "x2^-1 x1^-1");
  EXPECT_EQ(parse_word("x1 x1^-1").to_string(), "1");
  EXPECT_TRUE(parse_word("1").is_identity());
  EXPECT_EQ(parse_word("[[x1,x2],x3]"), commutator(commutator(Word::generator(1), Word::generator(2)), Word::generator(3)));
  EXPECT_THROW(parse_word("[x1,x2"), ParseError);
  EXPECT_THROW(parse_word("x0"), ParseError);
  EXPECT_THROW(parse_word("y1"), ParseError);
  EXPECT_THROW(parse_word("x4", 3), InputError);
}

TEST(Word, GroupLaws) {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
    EXPECT_TRUE((u * u.inverse()).is_identity());
    EXPECT_EQ((u * v).inverse(), v.inverse() * u.inverse());
    EXPECT_EQ(parse_word(u.to_string()), u);
    const auto su = exponent_sums(u, 3), sv = exponent_sums(v, 3), suv = exponent_sums(u * v, 3);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(suv[k], su[k] + sv[k]);
  }
}

TEST(Magnus, MatchesDirectProduct) {
  std::mt19937 rng(2);
  for (int i = 0; i < 60; ++i) {
    const Word w = random_word(rng, 3, 7);
    EXPECT_EQ(magnus(w, 4).coefficients(), magnus_oracle(w, 4)) << w.to_string();
  }
}

TEST(Magnus, IsMultiplicative) {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    EXPECT_EQ(magnus(u * v, 4), magnus(u, 4) * magnus(v, 4));
    EXPECT_EQ(exponential_magnus(u * v, 4), exponential_magnus(u, 4) * exponential_magnus(v, 4));
  }
}

TEST(Magnus, PrintsGraded) {
  EXPECT_EQ(magnus(parse_word("[x1,x2]"), 2).to_string(), "1 + X1X2 - X2X1");
  EXPECT_EQ(magnus(Word(), 3).to_string(), "1");
}

TEST(Magnus, LcsDegreeOfCommutators) {
  EXPECT_EQ(lcs_degree(parse_word("x1"), 3).degree, 1);
  EXPECT_EQ(lcs_degree(parse_word("[x1,x2]"), 3).degree, 2);
  EXPECT_EQ(lcs_degree(parse_word("[[x1,x2],x3]"), 4).degree, 3);
  const LcsDegree trivial = lcs_degree(parse_word("[x1,x1]"), 3);
  EXPECT_TRUE(trivial.at_least);
  const LcsDegree deep = lcs_degree(parse_word("[[x1,x2],[x1,x3]]"), 3);
  EXPECT_TRUE(deep.at_least);
  EXPECT_EQ(deep.degree, 3);
}

TEST(Lie, LyndonCountsFollowWitt) {
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 6; ++k)
      EXPECT_EQ(static_cast<long>(lyndon_words(k, r).size()), testkit::witt(k, r)) << k << "," << r;
}

TEST(Lie, StandardBracketsAreCoordinateUnits) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& w : lyndon_words(k, 3)) {
      const auto c = lyndon_coordinates(expand_bracket(standard_bracket(w)));
      ASSERT_EQ(c.size(), 1u);
      EXPECT_EQ(c.begin()->first, w);
      EXPECT_EQ(c.begin()->second, Rational(1));
    }
}

TEST(Lie, NonLieElementRejected) {
  EXPECT_THROW(lyndon_coordinates(NCPolynomial{{Monomial{1, 2}, Rational(1)}}), ValidationError);
}

TEST(Magnus, LogOfExponentialExpansionIsLie) {
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    const Word w = random_word(rng, 3, 6);
    EXPECT_NO_THROW(lyndon_coordinates(log_series(exponential_magnus(w, 4)))) << w.to_string();
  }
}

TEST(Phi, LeadingTreeExpansionIsTheTree) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& body : testkit::all_bodies(k, 3)) {
      if (expand_bracket(body).empty()) continue;  // zero Lie element
      const Word w = phi(body);
      const LcsDegree l = lcs_degree(w, k + 1);
      EXPECT_EQ(l.degree, k) << body.to_string();
      EXPECT_FALSE(l.at_least);
      const RootedSeries s = tree_expansion(w, k, 0);
      ASSERT_EQ(s.min_degree(), k) << body.to_string();
      NCPolynomial lead;
      for (const auto& [b, c] : s.component(k).terms)
        for (const auto& [m, x] : expand_bracket(b)) accumulate(lead, m, c * x);
      EXPECT_EQ(lead, expand_bracket(body)) << body.to_string();
    }
}

TEST(Fox, MatchesProductRuleOracle) {
  std::mt19937 rng(5);
  for (int level = 0; level <= 2; ++level)
    for (int i = 0; i < 30; ++i) {
      const Word w = random_word(rng, 3, 6);
      for (int g = 1; g <= 3; ++g) EXPECT_EQ(fox_derivative(w, g, level, 3), fox_oracle(w, g, level, 3)) << w.to_string();
    }
}

TEST(Fox, CommutatorExample) {
  const GroupRing d = fox_derivative(parse_word("[x1,x2]"), 1, 1, 2);
  GroupRing expect(2, 1);
  expect.add(SolvableElement::identity(2, 1), 1);
  expect.add(SolvableElement::letter({2, 1}, 2, 1), -1);
  EXPECT_EQ(d, expect);
}

TEST(Solvable, IsAHomomorphism) {
  std::mt19937 rng(6);
  for (int level = 1; level <= 3; ++level)
    for (int i = 0; i < 20; ++i) {
      const Word u = random_word(rng, 2, 5), v = random_word(rng, 2, 5);
      EXPECT_EQ(SolvableElement::of(u * v, 2, level), SolvableElement::of(u, 2, level) * SolvableElement::of(v, 2, level));
      EXPECT_TRUE(SolvableElement::of(u * u.inverse(), 2, level).is_identity());
    }
}

TEST(Derived, Examples) {
  EXPECT_TRUE(in_derived(parse_word("[x1,x2]"), 1, 2));
  EXPECT_FALSE(in_derived(parse_word("[x1,x2]"), 2, 2));
  EXPECT_TRUE(in_derived(parse_word("[[x1,x2],[x1,x3]]"), 2, 3));
  EXPECT_FALSE(in_derived(parse_word("[[x1,x2],[x1,x3]]"), 3, 3));
  EXPECT_FALSE(in_derived(parse_word("[[x1,x2],x3]"), 2, 3));
  EXPECT_FALSE(in_derived(parse_word("x1"), 1, 1));
  EXPECT_TRUE(in_derived(Word(), 3, 2));
}

TEST(Derived, CommutatorsClimbTheSeries) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Word a = random_word(rng, 3, 4), b = random_word(rng, 3, 4), c = random_word(rng, 3, 4),
               d = random_word(rng, 3, 4);
    const Word ab = commutator(a, b), cd = commutator(c, d);
    EXPECT_TRUE(in_derived(ab, 1, 3));
    EXPECT_TRUE(in_derived(commutator(ab, cd), 2, 3));
    // conjugation preserves membership
    EXPECT_TRUE(in_derived(a * commutator(ab, cd) * a.inverse(), 2, 3));
  }
}

TEST(Derived, LimitGuard) {
  Limits l;
  l.max_derived_depth = 1;
  EXPECT_THROW(in_derived(parse_word("[x1,x2]"), 2, 2, l), LimitError);
}
