#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "exclugraph/error.hpp"
#include "exclugraph/families.hpp"
#include "exclugraph/isomorphism.hpp"
#include "exclugraph/quantum_set.hpp"
#include "oracles.hpp"

namespace exclugraph {
namespace {

const double kRoot5 = std::sqrt(5.0);

Distribution random_distribution(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = unit(rng);
  return Distribution(v);
}

TEST(EProductTest, Examples) {
  const auto boundary = e_product(Distribution::constant(5, 1 / kRoot5), Distribution::constant(5, 1 / kRoot5));
  EXPECT_NEAR(boundary.value, 1.0, 1e-15);
  EXPECT_TRUE(boundary.satisfies_e);

  const auto half = e_product(Distribution::constant(5, 0.5), Distribution::constant(5, 0.5));
  EXPECT_DOUBLE_EQ(half.value, 1.25);
  EXPECT_FALSE(half.satisfies_e);

  const auto zero = e_product(Distribution({0.3, 0.9, 1, 0, 0.2}), Distribution::constant(5, 0));
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_TRUE(zero.satisfies_e);

  EXPECT_THROW(e_product(Distribution::constant(5, 0.1), Distribution::constant(4, 0.1)), ParameterError);
}

TEST(DistributionTest, RejectsOutOfRangeEntries) {
  EXPECT_THROW(Distribution({0.5, -0.1}), ParameterError);
  EXPECT_THROW(Distribution({0.5, 1.1}), ParameterError);
  EXPECT_THROW(Distribution({NAN}), ParameterError);
}

TEST(MembershipTest, Examples) {
  const Graph c5 = cycle_graph(5);
  const auto on = membership(c5, Distribution::constant(5, 1 / kRoot5));
  EXPECT_EQ(on.classification, Classification::boundary);
  EXPECT_NEAR(on.theta_complement, 1.0, 1e-6);
  EXPECT_FALSE(on.witness.has_value());

  const auto in = membership(c5, Distribution::constant(5, 0.4));
  EXPECT_EQ(in.classification, Classification::inside);
  EXPECT_NEAR(in.theta_complement, 0.4 * kRoot5, 1e-6);

  const auto out = membership(c5, Distribution::constant(5, 0.5));
  EXPECT_EQ(out.classification, Classification::outside);
  EXPECT_NEAR(out.theta_complement, 0.5 * kRoot5, 1e-6);
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_GT(e_product(Distribution::constant(5, 0.5), out.witness->distribution).value, 1.0);

  const auto point = membership(c5, Distribution({1, 0, 0, 0, 0}));
  EXPECT_EQ(point.classification, Classification::boundary);
  EXPECT_NEAR(point.theta_complement, 1.0, 1e-12);

  const auto zero = membership(c5, Distribution::constant(5, 0));
  EXPECT_EQ(zero.classification, Classification::inside);
  EXPECT_EQ(zero.theta_complement, 0.0);

  EXPECT_THROW(membership(c5, Distribution::constant(4, 0.1)), ParameterError);
}

TEST(MembershipTest, ClassificationMatchesThetaBand) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = trial % 2 ? cycle_graph(7) : petersen_graph();
    const auto v = membership(g, random_distribution(rng, g.order()));
    const double t = v.theta_complement;
    const Classification expected = t > 1 + kBoundaryBand   ? Classification::outside
                                    : t < 1 - kBoundaryBand ? Classification::inside
                                                            : Classification::boundary;
    EXPECT_EQ(v.classification, expected);
    EXPECT_EQ(v.witness.has_value(), expected == Classification::outside);
  }
}

TEST(MembershipTest, DownClosed) {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> shrink(0.0, 1.0);
  for (const Graph& g : {cycle_graph(5), cycle_graph(7)}) {
    const int n = g.order();
    int pairs = 0;
    while (pairs < 50) {
      // Inside points drawn by scaling a random direction into the body.
      std::vector<double> v(n);
      for (double& x : v) x = shrink(rng);
      const double t = solve_theta_sdp(complement(g), v).value;
      const double scale = std::min(1.0, shrink(rng) / t);
      std::vector<double> p(n), q(n);
      for (int i = 0; i < n; ++i) {
        p[i] = std::min(1.0, v[i] * scale);
        q[i] = p[i] * shrink(rng);
      }
      const auto outer = membership(g, Distribution(p));
      if (outer.classification != Classification::inside) continue;
      ++pairs;
      const auto inner = membership(g, Distribution(q));
      EXPECT_EQ(inner.classification, Classification::inside);
      EXPECT_LE(inner.theta_complement, outer.theta_complement + 1e-8);
    }
  }
}

void expect_verified(const Graph& g, const Distribution& p, const Witness& w) {
  EXPECT_LE(w.membership_check, 1 + kBoundaryBand);
  EXPECT_NEAR(solve_theta_sdp(g, w.distribution.values()).value, w.membership_check, 1e-8);
  double product = 0;
  for (int i = 0; i < p.size(); ++i) product += p[i] * w.distribution[i];
  EXPECT_EQ(w.product, product);
  EXPECT_GT(w.product, 1.0);
}

TEST(WitnessTest, Examples) {
  const Graph c5 = cycle_graph(5);
  const auto p = Distribution::constant(5, 0.5);
  const auto w = extract_witness(c5, p);
  expect_verified(c5, p, w);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(w.distribution[i], 1 / kRoot5, 1e-5);
  EXPECT_NEAR(w.product, 2.5 / kRoot5, 1e-5);

  const Graph chsh = circulant_graph(8, {1, 4});
  const auto q = Distribution::constant(8, 0.5);
  const auto wc = extract_witness(chsh, q);
  expect_verified(chsh, q, wc);
  EXPECT_NEAR(wc.product, 8 * 0.5 * (8 / (2 + std::sqrt(2.0))) / 8, 1e-5);
  EXPECT_NEAR(wc.product, 1.1715729, 1e-5);

  EXPECT_THROW(extract_witness(c5, Distribution::constant(5, 0.4)), PreconditionError);
  EXPECT_THROW(extract_witness(c5, Distribution::constant(5, 1 / kRoot5)), PreconditionError);
}

TEST(WitnessTest, AttainsTheComplementTheta) {
  std::mt19937 rng(23);
  int witnessed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 7;
    std::bernoulli_distribution coin(0.5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    const auto p = random_distribution(rng, n);
    const auto verdict = membership(g, p);
    if (verdict.classification != Classification::outside) continue;
    ++witnessed;
    const Witness& w = *verdict.witness;
    expect_verified(g, p, w);
    EXPECT_LE(std::abs(w.product - verdict.theta_complement), kDualityTolerance);
  }
  EXPECT_GT(witnessed, 20);
}

TEST(SymmetrizeTest, Examples) {
  const auto c5 = symmetrize(cycle_graph(5), Distribution({1, 0, 0, 0, 0}));
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(c5[i], 0.2, 1e-15);

  const auto p3 = symmetrize(path_graph(3), Distribution({0.6, 0.1, 0.2}));
  EXPECT_NEAR(p3[0], 0.4, 1e-15);
  EXPECT_NEAR(p3[1], 0.1, 1e-15);
  EXPECT_NEAR(p3[2], 0.4, 1e-15);

  const Distribution fixed({0.3, 0.7, 0.3});
  EXPECT_EQ(symmetrize(path_graph(3), fixed), fixed);

  EXPECT_THROW(symmetrize(empty_graph(11), Distribution::constant(11, 0.5)), CapacityError);
}

TEST(SymmetrizeTest, IdempotentSumPreservingAndInvariant) {
  std::mt19937 rng(24);
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), petersen_graph(), path_graph(5), circulant_graph(8, {1, 4})}) {
    const auto group = automorphism_group(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = random_distribution(rng, g.order());
      const auto q = symmetrize(g, p);
      const auto qq = symmetrize(g, q);
      EXPECT_NEAR(q.sum(), p.sum(), 1e-12);
      for (int i = 0; i < g.order(); ++i) EXPECT_NEAR(qq[i], q[i], 1e-12);
      for (const auto& phi : group.elements)
        for (int i = 0; i < g.order(); ++i) EXPECT_NEAR(q[phi(i)], q[i], 1e-12);
      if (is_vertex_transitive(g)) {
        const auto [lo, hi] = std::minmax_element(q.values().begin(), q.values().end());
        EXPECT_LE(*hi - *lo, 1e-12);
      }
    }
  }
}

TEST(QuantumMaxTest, Examples) {
  const auto c5 = quantum_max(cycle_graph(5));
  EXPECT_NEAR(c5.m_q, 2.2360680, 1e-6);
  ASSERT_TRUE(c5.p_max.has_value());
  EXPECT_NEAR(*c5.p_max, 0.4472136, 1e-6);
  EXPECT_NEAR(c5.product, 5.0, 1e-5);

  const auto k4 = quantum_max(complete_graph(4));
  EXPECT_NEAR(k4.m_q, 1.0, 1e-8);
  ASSERT_TRUE(k4.p_max.has_value());
  EXPECT_NEAR(*k4.p_max, 0.25, 1e-8);

  const auto chsh = quantum_max(circulant_graph(8, {1, 4}));
  EXPECT_NEAR(chsh.m_q, 3.4142136, 1e-5);
  EXPECT_NEAR(chsh.product, 8.0, 1e-5);

  const auto p3 = quantum_max(path_graph(3));
  EXPECT_FALSE(p3.vertex_transitive);
  EXPECT_FALSE(p3.p_max.has_value());
  EXPECT_NEAR(p3.m_q, 2.0, 1e-8);
}

TEST(QuantumMaxTest, ConstantDistributionIsOptimalOnVertexTransitiveGraphs) {
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), petersen_graph(), circulant_graph(8, {1, 4})}) {
    const auto report = quantum_max(g);
    ASSERT_TRUE(report.p_max.has_value());
    const double p = *report.p_max;
    EXPECT_NEAR(membership(g, Distribution::constant(g.order(), p)).theta_complement, 1.0, 1e-6);
    // Grid scan of the constant family: every level above p_max is outside.
    for (double level = 1e-3; level <= 1.0; level += 1e-3) {
      const double t = level * report.complement_m_q;  // homogeneity of theta
      if (level > p + 1e-6) EXPECT_GT(t, 1.0);
    }
    for (double level : {p + 1e-3, p + 1e-2}) {
      EXPECT_EQ(membership(g, Distribution::constant(g.order(), level)).classification, Classification::outside);
    }
  }
}

TEST(QuantumMaxTest, BoundaryProductIsSharp) {
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), cycle_graph(9), petersen_graph(), circulant_graph(8, {1, 4})}) {
    const auto report = quantum_max(g);
    const int n = g.order();
    const auto p = Distribution::constant(n, report.m_q / n);
    const auto q = Distribution::constant(n, report.complement_m_q / n);
    EXPECT_NEAR(e_product(p, q).value, 1.0, 1e-5);
  }
}

TEST(Result1Test, PentagonSeeded) {
  const auto r = verify_result1(cycle_graph(5), 100, 7);
  EXPECT_EQ(r.trials, 100);
  EXPECT_EQ(r.inside + r.boundary + r.outside, 100);
  EXPECT_GT(r.inside, 0);
  EXPECT_GT(r.outside, 0);
  EXPECT_EQ(r.e_product_violations, 0);
  EXPECT_EQ(r.witnesses_verified, r.outside);
  EXPECT_EQ(r.witness_failures, 0);
  EXPECT_LE(r.max_inside_product, 1 + 1e-6);
  EXPECT_TRUE(r.passed());

  const auto again = verify_result1(cycle_graph(5), 100, 7);
  EXPECT_EQ(again.inside, r.inside);
  EXPECT_EQ(again.max_inside_product, r.max_inside_product);
}

TEST(Result1Test, TrivialGraphs) {
  const auto k2 = verify_result1(complete_graph(2), 50, 1);
  EXPECT_TRUE(k2.passed());
  EXPECT_LE(k2.max_inside_product, 1 + 1e-6);
  const auto k1 = verify_result1(Graph(1), 30, 2);
  EXPECT_TRUE(k1.passed());
  EXPECT_EQ(k1.e_product_violations, 0);
}

TEST(Result2Test, Pentagon) {
  const auto r = verify_result2(cycle_graph(5), {0.05, 0.1, 0.2});
  ASSERT_EQ(r.entries.size(), 3u);
  const double expected[] = {1.05, 1.10, 1.20};
  for (int k = 0; k < 3; ++k) {
    const auto& e = r.entries[k];
    EXPECT_NEAR(e.product, expected[k], 1e-4);
    EXPECT_GT(e.product, 1.0);
    EXPECT_LE(e.witness_check, 1 + kBoundaryBand);
    EXPECT_LE(e.permuted_check, 1 + kBoundaryBand);
    EXPECT_TRUE(e.passed);
  }
  EXPECT_TRUE(r.increasing);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(relabel(cycle_graph(5), r.isomorphism), complement(cycle_graph(5)));
}

TEST(Result2Test, PathOnFourVertices) {
  const auto r = verify_result2(path_graph(4), {0.1});
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_GT(r.entries[0].product, 1.0);
  EXPECT_TRUE(r.passed());
}

TEST(Result2Test, Errors) {
  EXPECT_THROW(verify_result2(cycle_graph(4), {0.1}), StructuralError);
  EXPECT_THROW(verify_result2(petersen_graph(), {0.1}), StructuralError);
  EXPECT_THROW(verify_result2(cycle_graph(5), {2.0}), ParameterError);
}

TEST(Result3Test, Examples) {
  const auto c5 = verify_result3(cycle_graph(5));
  EXPECT_NEAR(c5.product, 5.0, 1e-5);
  EXPECT_NEAR(c5.e_value, 1.0, 1e-5);
  EXPECT_TRUE(c5.passed());

  const auto pet = verify_result3(petersen_graph());
  EXPECT_NEAR(pet.product, 10.0, 1e-5);
  EXPECT_TRUE(pet.passed());

  for (const Graph& g : {cycle_graph(7), cycle_graph(9), circulant_graph(8, {1, 4}), paley_graph(13)}) {
    const auto r = verify_result3(g);
    EXPECT_NEAR(r.product, g.order(), 1e-5);
    EXPECT_GE(r.upper_margin, 0);
    EXPECT_GE(r.lower_margin, 0);
  }

  EXPECT_THROW(verify_result3(path_graph(3)), StructuralError);
}

TEST(SolverHealthTest, VerifiersReportHealthySolves) {
  SolverHealth health;
  health.merge(verify_result1(cycle_graph(5), 20, 3).health);
  health.merge(verify_result2(cycle_graph(5), {0.1}).health);
  health.merge(verify_result3(petersen_graph()).health);
  EXPECT_GT(health.solves, 20);
  EXPECT_TRUE(health.healthy(kDefaultGapTolerance));
}

}  // namespace
}  // namespace exclugraph
