#include "sccay/iso.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sccay/constructions.hpp"
#include "sccay/error.hpp"
#include "sccay/fingerprint.hpp"
#include "sccay/graph_checks.hpp"
#include "test_graphs.hpp"

namespace sccay {
namespace {

using testing::cycle;
using testing::path;

TEST(OracleTest, BruteForceSanity) {
  EXPECT_TRUE(oracle::brute_force_isomorphic(cycle(5), complement(cycle(5))));
  EXPECT_FALSE(oracle::brute_force_isomorphic(cycle(5), path(5)));
  EXPECT_TRUE(oracle::brute_force_isomorphic(path(4), complement(path(4))));
  EXPECT_FALSE(oracle::brute_force_isomorphic(cycle(6), complement(cycle(6))));
}

TEST(AutomorphismScanTest, PaleyDoubling) {
  for (int q : {5, 13}) {
    const auto scan = selfcomp_by_group_automorphism(paley(q).connection_set);
    ASSERT_TRUE(scan.certificate.has_value());
    ASSERT_TRUE(scan.certificate->automorphism.has_value());
    EXPECT_EQ(scan.certificate->automorphism->generator_images[0].residues, std::vector<int>{2});
  }
}

TEST(AutomorphismScanTest, Davis3HasCertificate) {
  const auto s = davis(3).connection_set;
  const auto scan = selfcomp_by_group_automorphism(s);
  ASSERT_TRUE(scan.certificate.has_value());
  const auto g = build_cayley(s);
  EXPECT_TRUE(verify_certificate(g, complement(g), scan.certificate->permutation));
  // Deterministic: the same automorphism every time.
  const auto again = selfcomp_by_group_automorphism(s);
  EXPECT_EQ(again.certificate->permutation, scan.certificate->permutation);
}

TEST(AutomorphismScanTest, BudgetIsReported) {
  AutomorphismBudget tiny;
  tiny.max_candidates = 10;
  EXPECT_THROW(selfcomp_by_group_automorphism(paley(13).connection_set, tiny), BudgetExceeded);
}

TEST(FingerprintTest, Invariance) {
  std::mt19937_64 rng(31);
  for (const auto& g : {build_cayley(paley(13).connection_set), oracle::random_graph(30, 0.4, rng),
                        build_cayley(davis(3).connection_set)}) {
    const auto f = fingerprint(g);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(fingerprint(relabel(g, oracle::random_permutation(g.size(), rng))), f);
  }
  EXPECT_NE(fingerprint(cycle(5)), fingerprint(path(5)));
  const auto p13 = build_cayley(paley(13).connection_set);
  EXPECT_EQ(fingerprint(p13), fingerprint(complement(p13)));
  const auto diff = compare_fingerprints(cycle(5), path(5));
  ASSERT_TRUE(diff.has_value());
  EXPECT_EQ(diff->invariant, "degree multiset");
}

TEST(AreIsomorphicTest, Examples) {
  const std::vector<int> perm{0, 2, 4, 1, 3};
  const auto c5 = cycle(5);
  const auto relabeled = relabel(c5, perm);
  const auto r = are_isomorphic(c5, relabeled);
  ASSERT_TRUE(r.isomorphic());
  EXPECT_TRUE(verify_certificate(c5, relabeled, r.certificate.permutation));

  const auto neg = are_isomorphic(c5, path(5));
  EXPECT_EQ(neg.outcome, IsoOutcome::kNotIsomorphic);
  EXPECT_EQ(neg.certificate.kind, IsoCertificate::Kind::kInvariantRefutation);
  EXPECT_EQ(neg.certificate.invariant, "degree multiset");

  const auto p13 = build_cayley(paley(13).connection_set);
  const auto pc = are_isomorphic(p13, complement(p13));
  ASSERT_TRUE(pc.isomorphic());
  EXPECT_EQ(pc.certificate.kind, IsoCertificate::Kind::kVertexBijection);
  EXPECT_TRUE(verify_certificate(p13, complement(p13), pc.certificate.permutation));
}

TEST(AreIsomorphicTest, SearchWithoutFingerprint) {
  IsoOptions opts;
  opts.use_fingerprint = false;
  // Same degree sequence, different structure: C6 vs two triangles.
  GraphBuilder b(6);
  for (int base : {0, 3}) {
    b.add_edge(base, base + 1);
    b.add_edge(base + 1, base + 2);
    b.add_edge(base, base + 2);
  }
  const auto r = are_isomorphic(cycle(6), b.build(), opts);
  EXPECT_EQ(r.outcome, IsoOutcome::kNotIsomorphic);
  EXPECT_EQ(r.certificate.kind, IsoCertificate::Kind::kSearchExhausted);
  EXPECT_EQ(r.decided_by, "search");
}

TEST(AreIsomorphicTest, MatchesOracleOnSeededCorpus) {
  std::mt19937_64 rng(20240917);
  for (int n = 1; n <= 10; ++n) {
    std::vector<DenseGraph> corpus;
    for (double d : {0.25, 0.5, 0.75}) {
      const auto base = oracle::random_graph(n, d, rng);
      corpus.push_back(base);
      corpus.push_back(relabel(base, oracle::random_permutation(n, rng)));
    }
    for (bool fp : {true, false}) {
      IsoOptions opts;
      opts.use_fingerprint = fp;
      for (const auto& a : corpus)
        for (const auto& b : corpus) {
          const auto r = are_isomorphic(a, b, opts);
          ASSERT_TRUE(r.decided());
          ASSERT_EQ(r.isomorphic(), oracle::brute_force_isomorphic(a, b));
          if (r.isomorphic()) {
            ASSERT_TRUE(verify_certificate(a, b, r.certificate.permutation));
          }
        }
    }
  }
}

TEST(AreIsomorphicTest, CertificatesAreDeterministic) {
  const auto p = build_cayley(paley(29).connection_set);
  const auto a = are_isomorphic(p, complement(p));
  const auto b = are_isomorphic(p, complement(p));
  ASSERT_TRUE(a.isomorphic());
  EXPECT_EQ(a.certificate.permutation, b.certificate.permutation);
}

TEST(AreIsomorphicTest, BudgetGivesUndecided) {
  IsoOptions opts;
  opts.use_fingerprint = false;
  opts.refinement = Refinement::kBasic;
  opts.node_budget = 1;
  const auto p = build_cayley(paley(13).connection_set);
  const auto r = are_isomorphic(p, complement(p), opts);
  EXPECT_EQ(r.outcome, IsoOutcome::kUndecided);
  EXPECT_EQ(r.decided_by, "budget");
}

TEST(SelfComplementaryTest, Examples) {
  const auto p4 = path(4);
  const auto r = is_self_complementary(p4);
  ASSERT_TRUE(r.isomorphic());
  EXPECT_EQ(r.certificate.kind, IsoCertificate::Kind::kVertexBijection);
  EXPECT_TRUE(verify_certificate(p4, complement(p4), r.certificate.permutation));

  const auto d3 = davis(3).connection_set;
  const auto g = build_cayley(d3);
  const auto with_hint = is_self_complementary(g, d3);
  ASSERT_TRUE(with_hint.isomorphic());
  EXPECT_EQ(with_hint.decided_by, "group-automorphism");
  const auto without = is_self_complementary(g);
  ASSERT_TRUE(without.isomorphic());
  EXPECT_TRUE(verify_certificate(g, complement(g), without.certificate.permutation));

  EXPECT_EQ(is_self_complementary(cycle(6)).decided_by, "precheck");
  EXPECT_FALSE(is_self_complementary(cycle(6)).isomorphic());
}

TEST(SelfComplementaryTest, HintMustMatch) {
  EXPECT_THROW(is_self_complementary(build_cayley(paley(13).connection_set), paley(5).connection_set),
               StructuralError);
}

TEST(SelfComplementaryTest, LexicographicProductOfPaley5) {
  const auto s = lexprod(paley(5), paley(5)).connection_set;
  const auto g = build_cayley(s);
  const auto r = is_self_complementary(g);
  ASSERT_TRUE(r.isomorphic());
  EXPECT_TRUE(verify_certificate(g, complement(g), r.certificate.permutation));
}

TEST(VerifyCertificateTest, Examples) {
  const auto c5 = cycle(5);
  EXPECT_TRUE(verify_certificate(c5, c5, std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(verify_certificate(c5, path(5), std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(verify_certificate(c5, c5, std::vector<int>{0, 0, 2, 3, 4}));
  EXPECT_FALSE(verify_certificate(c5, c5, std::vector<int>{0, 1, 2}));
}

TEST(RefinementTest, EquitablePartition) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_graph(25, 0.3, rng);
    const auto c = refine_coloring(g, std::vector<int>(25, 0), false);
    // Vertices of the same colour see the same number of neighbours in each cell.
    for (int u = 0; u < 25; ++u)
      for (int v = 0; v < 25; ++v) {
        if (c.colors[u] != c.colors[v]) continue;
        std::vector<int> cu(c.cells, 0), cv(c.cells, 0);
        for (int w : g.neighbors(u)) ++cu[c.colors[w]];
        for (int w : g.neighbors(v)) ++cv[c.colors[w]];
        ASSERT_EQ(cu, cv);
      }
  }
}

}  // namespace
}  // namespace sccay
