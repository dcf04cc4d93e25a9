#include "support/testkit.hpp"

#include "clasp/clasper.hpp"
#include "clasp/errors.hpp"
#include "clasp/magnus.hpp"

#include <gtest/gtest.h>

using namespace clasp;

namespace {

ColoredTree beta5() {
  return tree_from_branches(parse_bracket("[1,2]"), parse_bracket("[1,3]"), parse_bracket("[2,3]"), 3);
}

ColoredTree h7() {
  return tree_from_branches(parse_bracket("[1,2]"), parse_bracket("[1,3]"), parse_bracket("[[2,3],[1,2]]"), 3);
}

NCPolynomial leading_lie(const Word& w, int k) {
  NCPolynomial out;
  for (const auto& [b, c] : tree_expansion(w, k, 0).component(k).terms)
    for (const auto& [m, x] : expand_bracket(b)) accumulate(out, m, c * x);
  return out;
}

}  // namespace

TEST(Pattern, Beta5IsAPattern) {
  const Pattern p = validate_pattern(beta5());
  EXPECT_EQ(p.vertex, 0);
  const auto parts = split(p);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].body.to_string(), "[1,2]");
  EXPECT_EQ(parts[1].body.to_string(), "[1,3]");
  EXPECT_EQ(parts[2].body.to_string(), "[2,3]");
}

TEST(Pattern, RejectsStrutComponents) {
  EXPECT_THROW(validate_pattern(make_vortex(1, 2, 3)), ValidationError);
  EXPECT_THROW(validate_pattern(make_strut(1, 2)), ValidationError);
  // vertex 0 of beta5 is admissible, its neighbours are not
  const ColoredTree t = beta5();
  EXPECT_THROW(validate_pattern(t, t.adj[0][0]), ValidationError);
  EXPECT_THROW(validate_pattern(t, 2 * t.vertex_count()), Error);
}

TEST(Pattern, ValidationAgreesWithBruteCheck) {
  for (int m = 3; m <= 5; ++m)
    for (const auto& ct : enumerate_trees(m, 2, default_limits(), true)) {
      const ColoredTree t = ct.to_tree(2);
      bool ok = true;
      try {
        validate_pattern(t);
      } catch (const ValidationError&) {
        ok = false;
      }
      EXPECT_EQ(ok, has_admissible_vertex(t)) << ct.to_string();
      if (m < 5) EXPECT_FALSE(ok);
    }
}

TEST(CTree, SlotAndVertexCounts) {
  for (int n = 1; n <= 4; ++n) {
    const ColoredTree c = c_tree(n);
    EXPECT_EQ(c.leaves().size(), std::size_t{1} << n);
    EXPECT_EQ(c.trivalent().size(), (std::size_t{1} << n) - 2);
    for (int k = 1; k <= (1 << n); ++k)
      EXPECT_EQ(std::count(c.color.begin(), c.color.end(), k), 1);
  }
  Limits l;
  l.max_c_tree = 2;
  EXPECT_THROW(c_tree(3, l), LimitError);
}

TEST(NPattern, MinimalOnePatternHasDegreeSeven) {
  EXPECT_THROW(validate_n_pattern(beta5(), 1), ValidationError);
  for (int m = 5; m <= 6; ++m)
    for (const auto& ct : enumerate_trees(m, 3))
      EXPECT_THROW(validate_n_pattern(ct.to_tree(3), 1), ValidationError) << ct.to_string();
  const NPattern q = validate_n_pattern(h7(), 1);
  EXPECT_EQ(q.embedding.size(), 2u);
  EXPECT_EQ(make_n_pattern(h7(), 1, q.embedding), q);
}

TEST(NPattern, BadEmbeddingRejected) {
  const ColoredTree t = h7();
  EXPECT_THROW(make_n_pattern(t, 1, {0}), Error);
  const auto tv = t.trivalent();
  EXPECT_THROW(make_n_pattern(t, 1, {tv[0], tv[0]}), ValidationError);
}

TEST(Build, Beta5Leaves) {
  const ClasperSpec c = build_clasper(validate_pattern(beta5()));
  EXPECT_EQ(c.degree(), 1);
  EXPECT_EQ(c.rank, 3);
  ASSERT_EQ(c.leaves.size(), 3u);
  EXPECT_EQ(c.leaves[0].word, parse_word("[x1,x2]"));
  EXPECT_EQ(c.leaves[1].word, parse_word("[x1,x3]"));
  EXPECT_EQ(c.leaves[2].word, parse_word("[x2,x3]"));
  EXPECT_NO_THROW(check_spec(c));
}

TEST(Compile, Beta5LinkingIsBlockForm) {
  const SurgeryPresentation s = compile_surgery(build_clasper(validate_pattern(beta5())));
  ASSERT_EQ(s.curves.size(), 6u);
  EXPECT_EQ(s.curves[0].label, "e1");
  EXPECT_EQ(s.curves[3].label, "l1");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(s.linking[i][j], (i == j + 3 || j == i + 3) ? 1 : 0);
  EXPECT_EQ(s.arm_count(), 3u);
  EXPECT_EQ(s.borromean, (std::vector<std::vector<int>>{{0, 1, 2}}));
  ASSERT_TRUE(s.certificate);
  EXPECT_EQ(s.certificate->facts.size(), 3u);
}

TEST(Compile, RefusesNonNullLeaf) {
  ClasperSpec c = build_clasper(validate_pattern(beta5()));
  c.leaves[1].word = parse_word("x1 x2");
  try {
    compile_surgery(c);
    FAIL() << "expected a refusal";
  } catch (const CertificateError& e) {
    EXPECT_EQ(e.failing_item(), "l2");
  }
  const SurgeryPresentation s = compile_surgery(c, true);
  EXPECT_FALSE(s.certificate);
  EXPECT_THROW(certify_null(s, 1), CertificateError);
}

TEST(Certify, ListsEveryMembership) {
  const SurgeryPresentation s = compile_surgery(build_clasper(validate_pattern(beta5())));
  const NullCertificate one = certify_null(s, 1);
  ASSERT_EQ(one.facts.size(), 3u);
  for (const auto& f : one.facts) {
    EXPECT_EQ(f.check, "exponent_sums = 0");
    EXPECT_TRUE(f.holds);
  }
  // [x1,x2] is not in F^(2)
  EXPECT_THROW(certify_null(s, 2), CertificateError);
}

TEST(Reduce, DegreeOneIsIdentity) {
  const ClasperSpec c = build_clasper(validate_pattern(beta5()));
  EXPECT_EQ(reduce_to_degree_one(c), c);
}

TEST(Reduce, LeavesCarryTheBranchLieElement) {
  // reduced leaf words have the branch as their leading Magnus tree
  for (const ColoredTree& t : testkit::npattern_catalog(1, 30, 99)) {
    const NPattern q = validate_n_pattern(t, 1);
    const ClasperSpec c = build_n_clasper(q);
    EXPECT_EQ(c.derived_level, 1);
    const ClasperSpec r = reduce_to_degree_one(c);
    ASSERT_EQ(r.degree(), 1);
    ASSERT_EQ(r.leaves.size(), 3u);
    for (const auto& l : r.leaves) EXPECT_TRUE(in_derived(l.word, 1, 3)) << l.word.to_string();
    // one end of the central edge is the reduction center
    auto matches = [&](int center) {
      for (const auto& part : split(Pattern{t, center})) {
        const NCPolynomial lie = expand_bracket(part.body);
        if (lie.empty()) continue;
        bool found = false;
        for (const auto& l : r.leaves) found = found || leading_lie(l.word, part.leaf_count()) == lie;
        if (!found) return false;
      }
      return true;
    };
    EXPECT_TRUE(matches(q.embedding[0]) || matches(q.embedding[1]));
  }
}

TEST(Reduce, DerivedLevelTwoCatalog) {
  for (const ColoredTree& t : testkit::npattern_catalog(2, 4, 5)) {
    const ClasperSpec r = reduce_to_degree_one(build_n_clasper(validate_n_pattern(t, 2)));
    for (const auto& l : r.leaves) EXPECT_TRUE(in_derived(l.word, 2, 3));
    const SurgeryPresentation s = compile_surgery(r);
    EXPECT_EQ(certify_null(s, 2).facts.size(), 6u);
  }
}

TEST(Reduce, RefusesLeafOutsideDerivedLevel) {
  ClasperSpec c = build_n_clasper(validate_n_pattern(h7(), 1));
  c.derived_level = 2;
  EXPECT_THROW(reduce_to_degree_one(c), CertificateError);
}

TEST(Expand, EdgesBecomeHopfPairs) {
  const ClasperSpec c = build_n_clasper(validate_n_pattern(h7(), 1));
  const ClasperSystem sys = expand_edges(c);
  EXPECT_EQ(sys.claspers.size(), c.shape.trivalent().size());
  EXPECT_EQ(sys.hopf.size(), internal_edges(c.shape).size());
  for (const auto& h : sys.hopf) {
    EXPECT_TRUE(sys.claspers[h.clasper_a].leaves[h.leaf_a].word.is_identity());
    EXPECT_TRUE(sys.claspers[h.clasper_b].leaves[h.leaf_b].word.is_identity());
    EXPECT_EQ(sys.linking[sys.global_leaf(h.clasper_a, h.leaf_a)][sys.global_leaf(h.clasper_b, h.leaf_b)], 1);
  }
  const SurgeryPresentation s = compile_surgery(sys);
  EXPECT_EQ(s.curves.size(), 6 * sys.claspers.size());
  EXPECT_TRUE(s.certificate);
}

TEST(Sphere, DegreeOneNullClasperPasses) {
  const SphereVerdict v = check_sphere_condition(build_clasper(validate_pattern(beta5())));
  EXPECT_TRUE(v.pass) << v.reason;
  EXPECT_FALSE(v.designated.empty());
  EXPECT_FALSE(v.assumption.empty());
}

TEST(ClasperSpecCheck, InconsistentClasperRejected) {
  ClasperSpec c = build_clasper(validate_pattern(beta5()));
  c.leaf_linking.pop_back();
  EXPECT_THROW(check_spec(c), ValidationError);
}
