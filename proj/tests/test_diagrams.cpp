#include "support/testkit.hpp"

#include "clasp/diagrams.hpp"
#include "clasp/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace clasp;

namespace {

// Random relabelling of vertex ids; the tree is unchanged up to isomorphism.
ColoredTree shuffle_ids(const ColoredTree& t, std::mt19937& rng) {
  std::vector<int> perm(t.vertex_count());
  for (int i = 0; i < t.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  ColoredTree out;
  out.colors = t.colors;
  out.adj.resize(t.adj.size());
  out.color.resize(t.color.size());
  for (int v = 0; v < t.vertex_count(); ++v) {
    out.color[perm[v]] = t.color[v];
    for (int w : t.adj[v]) out.adj[perm[v]].push_back(perm[w]);
  }
  // rotate every cyclic order by a random amount
  for (auto& a : out.adj) std::rotate(a.begin(), a.begin() + static_cast<long>(rng() % a.size()), a.end());
  return out;
}

TreeVector single(const ColoredTree& t, long c = 1) {
  TreeVector v(t.colors);
  v.add(t, Rational(c));
  return v;
}

}  // namespace

TEST(Bracket, ParsePrintRoundTrip) {
  std::mt19937 rng(7);
  for (int k = 1; k <= 6; ++k)
    for (int i = 0; i < 20; ++i) {
      const Bracket b = testkit::random_body(rng, k, 4);
      EXPECT_EQ(parse_bracket(b.to_string()), b);
    }
  EXPECT_EQ(parse_bracket("[-1,[2, 3]]").leaves(), (std::vector<int>{-1, 2, 3}));
  EXPECT_THROW(parse_bracket("[1,2"), ParseError);
  EXPECT_THROW(parse_bracket("[0,1]"), ParseError);
}

TEST(Tree, DegreeIsLegsMinusOne) {
  EXPECT_EQ(degree(make_strut(1, 2)), 1);
  EXPECT_EQ(degree(make_vortex(1, 2, 3)), 2);
  const ColoredTree b5 = tree_from_branches(parse_bracket("[1,2]"), parse_bracket("[1,3]"), parse_bracket("[2,3]"), 3);
  EXPECT_EQ(degree(b5), 5);
  EXPECT_EQ(b5.trivalent().size(), 4u);
}

TEST(Tree, CheckTreeRejectsMalformed) {
  ColoredTree t = make_vortex(1, 2, 3);
  t.adj[1].push_back(2);
  EXPECT_THROW(check_tree(t), Error);
  ColoredTree bad = make_strut(1, 2);
  bad.color[0] = 0;
  EXPECT_THROW(check_tree(bad), InputError);
}

TEST(Canonicalize, InvariantUnderRelabelAndRotation) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const ColoredTree t = tree_from_body(1 + static_cast<int>(rng() % 3), testkit::random_body(rng, 2 + i % 5, 3), 3);
    const Canonical a = canonicalize(t);
    const Canonical b = canonicalize(shuffle_ids(t, rng));
    EXPECT_EQ(a.rep, b.rep);
    EXPECT_EQ(a.sign, b.sign);
  }
}

TEST(Canonicalize, TransposeFlipsSign) {
  std::mt19937 rng(12);
  for (int i = 0; i < 200; ++i) {
    const ColoredTree t = tree_from_body(1, testkit::random_body(rng, 2 + i % 5, 3), 3);
    const auto tv = t.trivalent();
    const ColoredTree u = transpose_at(t, tv[rng() % tv.size()]);
    const Canonical a = canonicalize(t), b = canonicalize(u);
    EXPECT_EQ(a.rep, b.rep);
    EXPECT_EQ(a.sign, -b.sign);
    EXPECT_TRUE(is_zero(single(t) + single(u)));
  }
}

TEST(Canonicalize, RepresentativeRebuildsToSameClass) {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const ColoredTree t = tree_from_body(2, testkit::random_body(rng, 2 + i % 6, 3), 3);
    const Canonical c = canonicalize(t);
    const Canonical again = canonicalize(c.rep.to_tree(3));
    EXPECT_EQ(again.rep, c.rep);
    EXPECT_EQ(again.sign, c.sign == 0 ? 0 : 1);
  }
}

TEST(ASRelation, RepeatedColorVortexVanishes) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const ColoredTree y = make_vortex(a, a, b, 3);
      EXPECT_EQ(canonicalize(y).sign, 0);
      EXPECT_TRUE(is_zero(single(y)));
      EXPECT_TRUE(single(y).empty());
    }
  EXPECT_FALSE(is_zero(single(make_vortex(1, 2, 3, 3))));
}

TEST(IHXRelation, EveryInternalEdgeOfSmallTrees) {
  for (int m = 3; m <= 4; ++m)
    for (int root = 1; root <= 3; ++root)
      for (const auto& b : testkit::all_bodies(m, 3)) {
        const ColoredTree t = tree_from_body(root, b, 3);
        for (auto [u, w] : internal_edges(t)) {
          auto [h, x] = ihx_terms(t, u, w);
          EXPECT_TRUE(is_zero(single(t) - single(h) - single(x)));
          EXPECT_TRUE(is_zero(single(t) - ihx_resolve(t, u, w)));
        }
      }
}

TEST(IHXRelation, ResolveRejectsLeafEdge) {
  const ColoredTree y = make_vortex(1, 2, 3);
  EXPECT_THROW(ihx_resolve(y, 0, 1), ValidationError);
}

TEST(IsZero, AgreesWithRelationSpanOracle) {
  std::mt19937 rng(21);
  for (int m = 1; m <= 4; ++m)
    for (int r = 1; r <= 3; ++r) {
      const testkit::IhxOracle oracle(m, r);
      const auto& basis = oracle.basis();
      // every basis element and random combinations
      for (const auto& t : basis) {
        TreeVector v(r);
        v.add(t, Rational(1));
        EXPECT_EQ(is_zero(v), oracle.in_span(v)) << t.to_string();
      }
      for (int k = 0; k < 40 && !basis.empty(); ++k) {
        TreeVector v(r);
        for (int j = 0; j < 4; ++j)
          v.add(basis[rng() % basis.size()], Rational(static_cast<long>(rng() % 5) - 2));
        EXPECT_EQ(is_zero(v), oracle.in_span(v)) << v.to_string();
      }
    }
}

TEST(IsZero, KernelElementsFromOracleRelations) {
  // Jacobi combinations are zero; perturbing one coefficient is not (when
  // the tree is nonzero).
  std::mt19937 rng(22);
  for (int i = 0; i < 100; ++i) {
    const Bracket p = testkit::random_body(rng, 1 + i % 2, 3), q = testkit::random_body(rng, 1, 3),
                  y = testkit::random_body(rng, 1 + i % 3, 3);
    TreeVector v(3);
    v.add(tree_from_body(1, Bracket::join(Bracket::join(p, q), y), 3), Rational(1));
    v.add(tree_from_body(1, Bracket::join(p, Bracket::join(q, y)), 3), Rational(-1));
    v.add(tree_from_body(1, Bracket::join(q, Bracket::join(p, y)), 3), Rational(1));
    EXPECT_TRUE(is_zero(v));
  }
}

TEST(Dimension, MatchesOracleAndWittFormula) {
  for (int m = 1; m <= 4; ++m)
    for (int r = 1; r <= 3; ++r) {
      const std::size_t d = dim(m, r);
      EXPECT_EQ(d, testkit::IhxOracle(m, r).dimension()) << "m=" << m << " r=" << r;
      EXPECT_EQ(static_cast<long>(d), r * testkit::witt(m, r) - testkit::witt(m + 1, r)) << "m=" << m << " r=" << r;
    }
  EXPECT_EQ(dim(1, 2), 3u);
  EXPECT_EQ(dim(2, 2), 0u);
  EXPECT_EQ(dim(2, 3), 1u);
}

TEST(Dimension, RelationSpanAgreesWithIsZero) {
  const RelationSpan span = relation_span(3, 3);
  std::mt19937 rng(23);
  for (int k = 0; k < 50; ++k) {
    TreeVector v(3);
    for (int j = 0; j < 3; ++j) v.add(span.basis[rng() % span.basis.size()], Rational(static_cast<long>(rng() % 3) - 1));
    EXPECT_EQ(span.contains(v), is_zero(v));
  }
}

TEST(Enumerate, MatchesBruteForceCanonicalForms) {
  for (int m = 1; m <= 5; ++m)
    for (int r = 1; r <= 3; ++r) {
      std::set<CanonicalTree> nonnull, all;
      for (int root = 1; root <= r; ++root)
        for (const auto& b : testkit::all_bodies(m, r)) {
          const Canonical c = canonicalize(tree_from_body(root, b, r));
          all.insert(c.rep);
          if (c.sign != 0) nonnull.insert(c.rep);
        }
      const auto e = enumerate_trees(m, r);
      EXPECT_EQ(std::set<CanonicalTree>(e.begin(), e.end()), nonnull);
      EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
      const auto ea = enumerate_trees(m, r, default_limits(), true);
      EXPECT_EQ(std::set<CanonicalTree>(ea.begin(), ea.end()), all);
    }
}

TEST(Enumerate, LimitsAreEnforced) {
  Limits l;
  l.max_degree = 3;
  EXPECT_THROW(enumerate_trees(4, 2, l), LimitError);
  EXPECT_THROW(dim(4, 2, l), LimitError);
}

TEST(Eta, IsInjectiveModuloRelations) {
  // eta(v) = 0 in Lyndon coordinates exactly when v vanishes
  const ColoredTree y = make_vortex(1, 2, 3, 3);
  EXPECT_FALSE(lyndon_reduce(eta(y)).empty());
  EXPECT_TRUE(lyndon_reduce(eta(make_vortex(1, 1, 2, 2))).empty());
}
