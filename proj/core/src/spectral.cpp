#include "sigmat/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sigmat {

namespace {

using Matrix = Eigen::MatrixXd;

std::vector<double> symmetric_eigenvalues(const Matrix& a, const char* what) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError(std::string("symmetric eigensolver did not converge for the ") + what +
                       " matrix");
  }
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

Matrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Matrix a = Matrix::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t r = g.neighbors(u); r != 0; r &= r - 1) a(u, std::countr_zero(r)) = 1.0;
  }
  return a;
}

}  // namespace

double spectral_tolerance(int n, int max_degree) {
  return 1e-8 * std::max(1.0, static_cast<double>(n) * max_degree);
}

double spectral_tolerance(const Graph& g) {
  int max_degree = 0;
  for (int v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  return spectral_tolerance(g.order(), max_degree);
}

SpectralSummary laplacian_spectrum(const Graph& g) {
  const int n = g.order();
  const Matrix a = adjacency_matrix(g);
  Matrix l = -a;
  for (int v = 0; v < n; ++v) l(v, v) = g.degree(v);

  SpectralSummary s;
  s.laplacian_eigenvalues = symmetric_eigenvalues(l, "Laplacian");
  s.adjacency_eigenvalues = symmetric_eigenvalues(a, "adjacency");
  for (double lambda : s.adjacency_eigenvalues) s.energy += std::abs(lambda);
  s.mu2 = n >= 2 ? s.laplacian_eigenvalues[1] : 0.0;
  s.mu_n = s.laplacian_eigenvalues.back();
  return s;
}

double graph_energy(const Graph& g) {
  double energy = 0.0;
  for (double lambda : symmetric_eigenvalues(adjacency_matrix(g), "adjacency")) {
    energy += std::abs(lambda);
  }
  return energy;
}

double rayleigh_ratio(const Graph& g, std::span<const double> x) {
  const int n = g.order();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                " does not match graph order " + std::to_string(n));
  }
  if (!is_connected(g)) throw PreconditionError("rayleigh_ratio requires a connected graph");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (!(*hi > *lo)) throw std::domain_error("rayleigh_ratio requires a nonconstant vector");

  double edge_sum = 0.0;
  double pair_sum = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double diff = x[u] - x[v];
      pair_sum += diff * diff;
      if (g.adjacent(u, v)) edge_sum += diff * diff;
    }
  }
  return n * edge_sum / pair_sum;
}

}  // namespace sigmat
