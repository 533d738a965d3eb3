#pragma once

#include <span>
#include <vector>

#include "sigmat/errors.hpp"
#include "sigmat/graph.hpp"

namespace sigmat {

struct SpectralSummary {
  std::vector<double> laplacian_eigenvalues;  // ascending, mu_1 <= ... <= mu_n
  std::vector<double> adjacency_eigenvalues;  // ascending
  double energy = 0.0;
  double mu2 = 0.0;  // 0 when n == 1
  double mu_n = 0.0;
};

// Absolute tolerance for every floating-point comparison: 1e-8 * max(1, n * Delta).
double spectral_tolerance(int n, int max_degree);
double spectral_tolerance(const Graph& g);

// Eigenvalues of D - A and of A, via a dense symmetric solver. Throws
// NumericError if the solver does not converge.
SpectralSummary laplacian_spectrum(const Graph& g);

// Sum of |lambda_i| over the adjacency spectrum.
double graph_energy(const Graph& g);

// n * sum_{uv in E} (x_u - x_v)^2 / sum_{pairs} (x_u - x_v)^2. For connected g
// and nonconstant x this lies in [mu_2, mu_n]. Throws PreconditionError for a
// disconnected graph and std::domain_error for a constant vector.
double rayleigh_ratio(const Graph& g, std::span<const double> x);

}  // namespace sigmat
