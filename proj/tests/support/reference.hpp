#pragma once

// Reference computations used as test oracles. They work on plain adjacency
// matrices and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "sigmat/graph.hpp"

namespace ref {

using Matrix = std::vector<std::vector<double>>;

struct Adjacency {
  int n = 0;
  std::vector<std::vector<int>> a;

  explicit Adjacency(int order) : n(order), a(order, std::vector<int>(order, 0)) {}

  explicit Adjacency(const sigmat::Graph& g) : Adjacency(g.order()) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
    }
  }

  void link(int u, int v) { a[u][v] = a[v][u] = 1; }

  int degree(int v) const { return std::accumulate(a[v].begin(), a[v].end(), 0); }

  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> d(n);
    for (int v = 0; v < n; ++v) d[v] = degree(v);
    return d;
  }

  std::int64_t edges() const {
    std::int64_t twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }
};

inline std::int64_t pair_sum(const Adjacency& g) {
  const auto d = g.degrees();
  std::int64_t s = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) s += (d[u] - d[v]) * (d[u] - d[v]);
  }
  return s;
}

inline std::int64_t edge_sum(const Adjacency& g) {
  const auto d = g.degrees();
  std::int64_t s = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.a[u][v]) s += (d[u] - d[v]) * (d[u] - d[v]);
    }
  }
  return s;
}

inline std::int64_t edge_abs_sum(const Adjacency& g) {
  const auto d = g.degrees();
  std::int64_t s = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.a[u][v]) s += d[u] > d[v] ? d[u] - d[v] : d[v] - d[u];
    }
  }
  return s;
}

// Variance of the degrees as an unreduced fraction: sum (n d - 2m)^2 / n^3.
inline std::pair<std::int64_t, std::int64_t> variance(const Adjacency& g) {
  const auto d = g.degrees();
  const std::int64_t m = g.edges();
  std::int64_t num = 0;
  for (std::int64_t x : d) num += (g.n * x - 2 * m) * (g.n * x - 2 * m);
  return {num, std::int64_t{g.n} * g.n * g.n};
}

inline bool connected(const Adjacency& g) {
  std::vector<int> seen(g.n, 0), stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n; ++v) {
      if (g.a[u][v] && !seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.n;
}

inline bool has_triangle(const Adjacency& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (g.a[a][b] && g.a[b][c] && g.a[a][c]) return true;
  return false;
}

// Cyclic Jacobi rotations; returns ascending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline Matrix laplacian(const Adjacency& g) {
  Matrix l(g.n, std::vector<double>(g.n, 0.0));
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) l[u][v] = -g.a[u][v];
    l[u][u] = g.degree(u);
  }
  return l;
}

inline Matrix adjacency(const Adjacency& g) {
  Matrix a(g.n, std::vector<double>(g.n, 0.0));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) a[u][v] = g.a[u][v];
  return a;
}

inline double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Labeled connected graphs: c(n) = 2^C(n,2) - sum_k C(n-1,k-1) c(k) 2^C(n-k,2).
inline std::vector<std::uint64_t> labeled_connected_counts(int max_n) {
  std::vector<std::uint64_t> c(max_n + 1, 0);
  const auto all = [](int k) { return std::uint64_t{1} << (k * (k - 1) / 2); };
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t rest = 0;
    for (int k = 1; k < n; ++k) {
      rest += static_cast<std::uint64_t>(binomial(n - 1, k - 1)) * c[k] * all(n - k);
    }
    c[n] = all(n) - rest;
  }
  return c;
}

}  // namespace ref
