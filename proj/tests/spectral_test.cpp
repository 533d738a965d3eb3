#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sigmat/errors.hpp"
#include "sigmat/extremal.hpp"
#include "sigmat/invariants.hpp"
#include "sigmat/oracle.hpp"
#include "sigmat/spectral.hpp"
#include "support/reference.hpp"

using namespace sigmat;

namespace {

void expect_spectrum(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << i;
}

}  // namespace

TEST(Spectrum, ClosedForms) {
  expect_spectrum(laplacian_spectrum(make_star(4)).laplacian_eigenvalues, {0, 1, 1, 4});
  expect_spectrum(laplacian_spectrum(make_path(4)).laplacian_eigenvalues,
                  {0, 2 - std::sqrt(2.0), 2, 2 + std::sqrt(2.0)});
  const SpectralSummary k4 = laplacian_spectrum(make_complete(4));
  expect_spectrum(k4.laplacian_eigenvalues, {0, 4, 4, 4});
  expect_spectrum(k4.adjacency_eigenvalues, {-1, -1, -1, 3});
  EXPECT_NEAR(k4.mu2, 4, 1e-10);
  EXPECT_NEAR(k4.mu_n, 4, 1e-10);
}

TEST(Spectrum, PathsAndCycles) {
  for (int n = 2; n <= 12; ++n) {
    std::vector<double> path, cycle;
    for (int k = 0; k < n; ++k) {
      path.push_back(2 - 2 * std::cos(k * M_PI / n));
      cycle.push_back(2 - 2 * std::cos(2 * k * M_PI / n));
    }
    std::sort(path.begin(), path.end());
    std::sort(cycle.begin(), cycle.end());
    expect_spectrum(laplacian_spectrum(make_path(n)).laplacian_eigenvalues, path);
    if (n >= 3) expect_spectrum(laplacian_spectrum(make_cycle(n)).laplacian_eigenvalues, cycle);
  }
}

TEST(Spectrum, SingleVertex) {
  const SpectralSummary s = laplacian_spectrum(Graph(1));
  EXPECT_EQ(s.mu2, 0.0);
  EXPECT_EQ(s.energy, 0.0);
}

TEST(Energy, Examples) {
  EXPECT_NEAR(graph_energy(make_star(4)), 2 * std::sqrt(3.0), 1e-10);
  // eigenvalues +-(1 + sqrt 5)/2, +-(sqrt 5 - 1)/2
  EXPECT_NEAR(graph_energy(make_path(4)), 2 * std::sqrt(5.0), 1e-10);
  EXPECT_NEAR(graph_energy(Graph(3)), 0.0, 1e-12);
  EXPECT_NEAR(graph_energy(make_complete(4)), 6.0, 1e-10);
}

TEST(SpectrumProperty, MatchesJacobiReference) {
  for (int n = 1; n <= 14; ++n) {
    for (const Graph& g : random_graphs(n, 15, 31 * n)) {
      const ref::Adjacency a(g);
      const SpectralSummary s = laplacian_spectrum(g);
      const auto lap = ref::jacobi_eigenvalues(ref::laplacian(a));
      const auto adj = ref::jacobi_eigenvalues(ref::adjacency(a));
      for (int i = 0; i < n; ++i) {
        ASSERT_NEAR(s.laplacian_eigenvalues[i], lap[i], 1e-9);
        ASSERT_NEAR(s.adjacency_eigenvalues[i], adj[i], 1e-9);
      }
      double energy = 0;
      for (double x : adj) energy += std::abs(x);
      ASSERT_NEAR(s.energy, energy, 1e-8);
      // trace of L is 2m
      double trace = 0;
      for (double x : s.laplacian_eigenvalues) trace += x;
      ASSERT_NEAR(trace, 2.0 * g.size(), 1e-8);
    }
  }
}

TEST(Tolerance, ScalesWithDegree) {
  EXPECT_DOUBLE_EQ(spectral_tolerance(1, 0), 1e-8);
  EXPECT_DOUBLE_EQ(spectral_tolerance(5, 4), 2e-7);
  EXPECT_DOUBLE_EQ(spectral_tolerance(make_star(4)), 1.2e-7);
}

TEST(Rayleigh, Examples) {
  const std::vector<double> deg{1, 2, 2, 1};
  EXPECT_NEAR(rayleigh_ratio(make_path(4), deg), 2.0, 1e-12);

  const std::vector<double> indicator{1, 0};
  EXPECT_NEAR(rayleigh_ratio(make_path(2), indicator), 2.0, 1e-12);

  const std::vector<double> star{3, 1, 1, 1};
  EXPECT_NEAR(rayleigh_ratio(make_star(4), star), 4.0, 1e-12);
}

TEST(Rayleigh, Errors) {
  const std::vector<double> short_vec{1, 2};
  EXPECT_THROW(rayleigh_ratio(make_path(4), short_vec), std::invalid_argument);
  const std::vector<double> flat{1, 1, 1, 1};
  EXPECT_THROW(rayleigh_ratio(make_path(4), flat), std::domain_error);
  const std::vector<double> x{1, 0, 0, 0};
  EXPECT_THROW(rayleigh_ratio(Graph(4, {{0, 1}, {2, 3}}), x), PreconditionError);
}

TEST(RayleighProperty, BetweenExtremeEigenvalues) {
  std::mt19937_64 rng(4242);
  std::normal_distribution<double> normal;
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& g : random_graphs(n, 30, 77 * n)) {
      if (!is_connected(g)) continue;
      const SpectralSummary s = laplacian_spectrum(g);
      const double tol = spectral_tolerance(g);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(n);
        for (double& v : x) v = normal(rng);
        const double r = rayleigh_ratio(g, x);
        ASSERT_GE(r, s.mu2 - tol);
        ASSERT_LE(r, s.mu_n + tol);
      }
    }
  }
}
