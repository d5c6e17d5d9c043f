#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "longcycle/error.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/spectral.hpp"
#include "oracles.hpp"

namespace longcycle {
namespace {

double l1(const std::vector<double>& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

TEST(SpectralRadiusTest, CompleteGraphs) {
  for (int n = 1; n <= 12; ++n) {
    const auto r = spectral_radius(complete_graph(n));
    EXPECT_NEAR(r.mu, n - 1, 1e-10);
    for (double x : r.perron) EXPECT_NEAR(x, 1.0 / n, 1e-12);
  }
}

TEST(SpectralRadiusTest, NamedExamples) {
  EXPECT_NEAR(spectral_radius(cycle_graph(5)).mu, 2.0, 1e-10);
  EXPECT_NEAR(spectral_radius(construct_snk(5, 2)).mu, 3.0, 1e-10);
  // Bipartite inputs must not oscillate.
  EXPECT_NEAR(spectral_radius(path_graph(4)).mu, (1 + std::sqrt(5.0)) / 2, 1e-10);
  EXPECT_NEAR(spectral_radius(construct_snk(10, 1)).mu, 3.0, 1e-10);
  EXPECT_NEAR(spectral_radius(cycle_graph(6)).mu, 2.0, 1e-10);
  EXPECT_NEAR(spectral_radius(Graph(3)).mu, 0.0, 1e-12);
}

TEST(SpectralRadiusTest, MatchesDenseSolverOnRandomGraphs) {
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    const int n = uniform_int(rng, 1, 40);
    const Graph g = random_graph(rng, n, uniform_unit(rng) * 0.6);
    const auto r = spectral_radius(g);
    EXPECT_NEAR(r.mu, oracle::largest_eigenvalue(g), 1e-10) << "iteration " << i;
    EXPECT_LE(r.residual, 1e-10);
    EXPECT_NEAR(l1(r.perron), 1.0, 1e-12);
    for (double x : r.perron) EXPECT_GE(x, 0.0);
  }
}

TEST(SpectralRadiusTest, ConnectedGraphsHavePositivePerronVector) {
  Rng rng(102);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 30), 0.1);
    const auto r = spectral_radius(g);
    for (double x : r.perron) EXPECT_GT(x, 0.0);
  }
}

TEST(SpectralRadiusTest, DisconnectedUsesMaximisingComponent) {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(4));
  const auto r = spectral_radius(g);
  EXPECT_NEAR(r.mu, 3.0, 1e-10);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(r.perron[v], 0.0);
  for (Vertex v = 3; v < 7; ++v) EXPECT_NEAR(r.perron[v], 0.25, 1e-12);
}

TEST(SpectralRadiusTest, IterationCapReportsError) {
  PowerIterationOptions opts;
  opts.max_iterations = 3;
  EXPECT_THROW(spectral_radius(path_graph(30), opts), ConvergenceError);
}

TEST(SpectralRadiusTest, AddingAnEdgeNeverLowersMu) {
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 16), 0.2);
    const double mu = spectral_radius(g).mu;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!g.has_edge(u, v)) {
          EXPECT_GE(spectral_radius(g.with_edge(u, v)).mu, mu - 1e-12);
        }
  }
}

TEST(ClosedFormTest, Examples) {
  EXPECT_DOUBLE_EQ(mu_snk_closed_form(5, 2), 3.0);
  EXPECT_DOUBLE_EQ(mu_snk_closed_form(2, 1), 1.0);
  EXPECT_NEAR(mu_snk_closed_form(10, 2), 0.5 + std::sqrt(16.25), 1e-15);
  EXPECT_NEAR(mu_snk_closed_form(10, 2), 4.5311288741, 1e-10);
  EXPECT_NEAR(spectral_radius(construct_snk(10, 2)).mu, mu_snk_closed_form(10, 2), 1e-10);
  EXPECT_THROW(mu_snk_closed_form(3, 3), DomainError);
}

TEST(ColumnSumTest, CombinatorialExamples) {
  for (Vertex u = 0; u < 5; ++u) EXPECT_EQ(column_sum_combinatorial(cycle_graph(5), u, 2), -4);
  for (Vertex u = 0; u < 4; ++u) EXPECT_EQ(column_sum_combinatorial(complete_graph(4), u, 1), 6);
  for (int k = 1; k <= 4; ++k)
    for (int n = k + 1; n <= 20; ++n) {
      const Graph s = construct_snk(n, k);
      for (Vertex u = 0; u < n; ++u) EXPECT_EQ(column_sum_combinatorial(s, u, k), 0);
    }
}

TEST(ColumnSumTest, HalfIntegralExamples) {
  for (Vertex u = 0; u < 5; ++u) EXPECT_EQ(column_sum_combinatorial_g(cycle_graph(5), u, 2), -4.5);
  EXPECT_EQ(column_sum_combinatorial_g(complete_graph(2), 0, 1), -0.5);
}

TEST(ColumnSumTest, AgreesWithMatrixOracle) {
  Rng rng(104);
  for (int i = 0; i < 100; ++i) {
    const int n = uniform_int(rng, 1, 20);
    const Graph g = random_graph(rng, n, uniform_unit(rng));
    for (int k = 1; k <= 3; ++k) {
      const auto exact = oracle::column_sums(g, -(k - 1), -std::int64_t{k} * (n - k));
      const auto half = oracle::column_sums_real(g, -k, -(k - 0.5) * (n - k));
      for (Vertex u = 0; u < n; ++u) {
        EXPECT_EQ(column_sum_combinatorial(g, u, k), exact[u]);
        EXPECT_NEAR(column_sum_combinatorial_g(g, u, k), half[u], 1e-12);
      }
    }
  }
}

TEST(CertificateTest, SnkIsEqualityCase) {
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= 40; n += 7) {
      const auto c = quotient_certificate(construct_snk(n, k), k - 1, double(k) * (n - k));
      EXPECT_TRUE(c.exact);
      EXPECT_EQ(c.verdict, CertificateVerdict::EqualityCandidate);
      ASSERT_TRUE(c.mu_bound);
      EXPECT_NEAR(*c.mu_bound, mu_snk_closed_form(n, k), 1e-12);
    }
}

TEST(CertificateTest, CycleBoundHolds) {
  const auto c = quotient_certificate(cycle_graph(5), 1, 6);
  EXPECT_EQ(c.verdict, CertificateVerdict::BoundHolds);
  for (double s : c.column_sums) EXPECT_EQ(s, -4.0);
  EXPECT_DOUBLE_EQ(*c.mu_bound, 3.0);
  EXPECT_LE(spectral_radius(cycle_graph(5)).mu, *c.mu_bound);
}

TEST(CertificateTest, CompleteGraphInapplicable) {
  const auto c = quotient_certificate(complete_graph(5), 1, 6);
  EXPECT_EQ(c.verdict, CertificateVerdict::Inapplicable);
  const auto oracle_sums = oracle::column_sums(complete_graph(5), -1, -6);
  for (Vertex j = 0; j < 5; ++j) EXPECT_EQ(c.column_sums[j], double(oracle_sums[j]));
}

TEST(CertificateTest, RejectsDisconnectedAndNonpositiveCoefficients) {
  EXPECT_THROW(quotient_certificate(Graph(2), 1, 1), DomainError);
  EXPECT_THROW(quotient_certificate(cycle_graph(5), 0, 6), DomainError);
  EXPECT_THROW(quotient_certificate(cycle_graph(5), 1, -1), DomainError);
}

TEST(CertificateTest, ShiftedPolynomialMatchesMatrixOracle) {
  // g(x) = x^2 - (k-1)x - k(n-k) - c(x - mu) with the star-joined correction
  // c = (n + k^2 - k - 1) / (n - 1 - mu).
  Rng rng(105);
  for (int i = 0; i < 50; ++i) {
    const int n = uniform_int(rng, 6, 16);
    const int k = uniform_int(rng, 2, 3);
    if (k >= n) continue;
    const Graph g = random_connected_graph(rng, n, 0.3);
    const double mu = mu_snk_closed_form(n, k);
    const double c = (n + k * k - k - 1) / (n - 1 - mu);
    const auto cert = quotient_certificate(g, k - 1, double(k) * (n - k), c, mu);
    EXPECT_FALSE(cert.exact);
    const auto sums = oracle::column_sums_real(g, -(k - 1) - c, -double(k) * (n - k) + c * mu);
    for (Vertex j = 0; j < n; ++j) EXPECT_NEAR(cert.column_sums[j], sums[j], 1e-9);
    ASSERT_TRUE(cert.mu_bound);
    // mu is a root of g.
    const double at_mu = mu * mu - (k - 1) * mu - double(k) * (n - k) - c * (mu - mu);
    EXPECT_NEAR(at_mu, 0.0, 1e-9);
    if (cert.verdict != CertificateVerdict::Inapplicable) {
      EXPECT_LE(spectral_radius(g).mu, *cert.mu_bound + 1e-9);
    }
  }
}

TEST(CertificateTest, SoundnessOnRandomConnectedGraphs) {
  Rng rng(106);
  int bounded = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 12), uniform_unit(rng) * 0.5);
    const int a = uniform_int(rng, 1, 20);
    const int b = uniform_int(rng, 1, 20);
    const auto c = quotient_certificate(g, a, b);
    if (c.verdict == CertificateVerdict::Inapplicable) continue;
    ++bounded;
    EXPECT_LE(spectral_radius(g).mu, *c.mu_bound + 1e-9);
    if (c.verdict == CertificateVerdict::EqualityCandidate) {
      EXPECT_NEAR(spectral_radius(g).mu, *c.mu_bound, 1e-9);
    }
  }
  EXPECT_GT(bounded, 50);
}

TEST(JoinComparisonTest, PinnedExamples) {
  // Reference values from a dense eigensolver (tests/oracles/reference_oracles.py).
  auto r = lemma8_compare(std::nullopt, 6, 3, 3);
  EXPECT_TRUE(r.strict());
  EXPECT_NEAR(r.mu_merged, 3.9095159661559507, 1e-9);
  EXPECT_NEAR(r.mu_split, 3.6457513110645916, 1e-9);

  r = lemma8_compare(std::nullopt, 7, 3, 4);
  EXPECT_TRUE(r.strict());
  EXPECT_NEAR(r.mu_merged, 4.1755443873505005, 1e-9);
  EXPECT_NEAR(r.mu_split, 3.8703680526520894, 1e-9);

  r = lemma8_compare(complete_graph(3), 6, 3, 3);
  EXPECT_TRUE(r.strict());
  EXPECT_NEAR(r.mu_merged, 4.324705867387971, 1e-9);
  EXPECT_NEAR(r.mu_split, 4.162277660168378, 1e-9);
}

TEST(JoinComparisonTest, DomainErrors) {
  EXPECT_THROW(lemma8_compare(std::nullopt, 6, 2, 4), DomainError);
  EXPECT_THROW(lemma8_compare(std::nullopt, 7, 3, 3), DomainError);
  EXPECT_THROW(lemma8_compare(complete_graph(40), 24, 12, 12), DomainError);
}

}  // namespace
}  // namespace longcycle
