#include "sigmat/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sigmat/errors.hpp"

namespace sigmat {

namespace {

__extension__ typedef __int128 Wide;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

// 8k <= A - sqrt(D)
bool below_critical(std::int64_t k, Wide a, Wide d) {
  const Wide gap = a - 8 * static_cast<Wide>(k);
  return gap >= 0 && d <= gap * gap;
}

// 8k >= A - sqrt(D)
bool above_critical(std::int64_t k, Wide a, Wide d) {
  const Wide gap = a - 8 * static_cast<Wide>(k);
  return gap <= 0 || d >= gap * gap;
}

}  // namespace

Graph make_split(int clique_size, int independent_size) {
  require(clique_size >= 1 && independent_size >= 0, "split graph needs a >= 1 and b >= 0");
  const int n = clique_size + independent_size;
  Graph g(n);
  for (int u = 0; u < clique_size; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_split(SplitSpec spec) { return make_split(spec.clique_size, spec.independent_size); }

Graph make_complete_bipartite(int n1, int n2) {
  require(n1 >= 1 && n2 >= 1, "complete bipartite graph needs both sides nonempty");
  Graph g(n1 + n2);
  for (int u = 0; u < n1; ++u) {
    for (int v = n1; v < n1 + n2; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_star(int n) {
  require(n >= 1, "star needs n >= 1");
  return make_split(1, n - 1);
}

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  return make_split(n, 0);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_generalized_kpartite(std::span<const KPartitePart> parts) {
  require(!parts.empty(), "at least one part is required");
  int n = 0;
  for (const KPartitePart& p : parts) {
    require(p.size >= 1, "part sizes must be positive");
    require(p.inner_degree >= 0 && p.inner_degree <= p.size - 1,
            "inner degree must lie in [0, size - 1]");
    require((p.inner_degree * p.size) % 2 == 0,
            "no " + std::to_string(p.inner_degree) + "-regular graph on " +
                std::to_string(p.size) + " vertices");
    n += p.size;
  }
  Graph g(n);
  int start = 0;
  for (const KPartitePart& p : parts) {
    for (int j = 0; j < p.size; ++j) {
      for (int offset = 1; offset <= p.inner_degree / 2; ++offset) {
        g.add_edge(start + j, start + (j + offset) % p.size);
      }
      if (p.inner_degree % 2 == 1) g.add_edge(start + j, start + (j + p.size / 2) % p.size);
    }
    for (int u = start; u < start + p.size; ++u) {
      for (int v = start + p.size; v < n; ++v) g.add_edge(u, v);
    }
    start += p.size;
  }
  return g;
}

bool is_generalized_complete_kpartite(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const std::uint64_t non_neighbours = g.vertex_mask() & ~g.neighbors(u) & ~(std::uint64_t{1} << u);
    for (std::uint64_t r = non_neighbours >> u; r != 0; r &= r - 1) {
      if (g.degree(u + std::countr_zero(r)) != g.degree(u)) return false;
    }
  }
  return true;
}

std::int64_t sigma_t_split_formula(std::int64_t x, std::int64_t n) {
  require(x >= 1 && x <= n - 1, "split formula needs 1 <= x <= n - 1");
  return x * (n - x) * (n - 1 - x) * (n - 1 - x);
}

std::int64_t sigma_t_bipartite_formula(std::int64_t n1, std::int64_t n2) {
  require(n1 >= 1 && n2 >= 1, "bipartite formula needs n1, n2 >= 1");
  return n1 * n2 * (n1 - n2) * (n1 - n2);
}

CriticalPoint split_critical_point(std::int64_t n) {
  require(n >= 2, "critical point needs n >= 2");
  require(n <= (std::int64_t{1} << 40), "critical point: n too large");
  const Wide a = 5 * static_cast<Wide>(n) - 2;
  const Wide d = 9 * static_cast<Wide>(n) * n - 4 * static_cast<Wide>(n) + 4;

  CriticalPoint cp;
  cp.value = (5.0 * static_cast<double>(n) - 2.0 -
              std::sqrt(9.0 * static_cast<double>(n) * static_cast<double>(n) -
                        4.0 * static_cast<double>(n) + 4.0)) /
             8.0;

  std::int64_t k = static_cast<std::int64_t>(std::floor(cp.value));
  while (!below_critical(k, a, d)) --k;
  while (below_critical(k + 1, a, d)) ++k;
  cp.floor = k;

  k = static_cast<std::int64_t>(std::ceil(cp.value));
  while (!above_critical(k, a, d)) ++k;
  while (above_critical(k - 1, a, d)) --k;
  cp.ceil = k;
  return cp;
}

SplitOptimum max_split_sigma_t(int n) {
  require(n >= 3, "split optimum needs n >= 3");
  SplitOptimum opt;
  opt.n = n;
  const int residue = n % 4;
  opt.x = (residue == 0 || residue == 3) ? (n + 3) / 4 : n / 4;
  opt.value = sigma_t_split_formula(opt.x, n);

  opt.scan_value = -1;
  for (std::int64_t y = 1; y <= n - 1; ++y) {
    const std::int64_t v = sigma_t_split_formula(y, n);
    if (v > opt.scan_value) {
      opt.scan_value = v;
      opt.scan_argmax.clear();
    }
    if (v == opt.scan_value) opt.scan_argmax.push_back(y);
  }
  opt.agrees = opt.scan_value == opt.value &&
               std::find(opt.scan_argmax.begin(), opt.scan_argmax.end(), opt.x) !=
                   opt.scan_argmax.end();
  return opt;
}

BipartiteOptimum max_bipartite_split(int n) {
  require(n >= 2, "bipartite optimum needs n >= 2");
  BipartiteOptimum opt;
  opt.n = n;
  opt.value = -1;
  for (std::int64_t t = 1; t <= n / 2; ++t) {
    const std::int64_t v = sigma_t_bipartite_formula(t, n - t);
    if (v > opt.value) {
      opt.value = v;
      opt.tie_set.clear();
    }
    if (v == opt.value) opt.tie_set.push_back(t);
  }
  opt.n1 = opt.tie_set.front();
  opt.n2 = n - opt.n1;
  opt.tie = opt.tie_set.size() > 1;

  // floor(n (2 - sqrt 2) / 4) = largest k with 2n^2 <= (2n - 4k)^2 and 4k <= 2n.
  // The quantity is irrational, so the ceiling is always floor + 1.
  const Wide two_n_sq = 2 * static_cast<Wide>(n) * n;
  std::int64_t k = 0;
  while (true) {
    const Wide gap = 2 * static_cast<Wide>(n) - 4 * static_cast<Wide>(k + 1);
    if (gap < 0 || two_n_sq > gap * gap) break;
    ++k;
  }
  opt.candidate_floor = k;
  opt.candidate_ceil = k + 1;
  opt.winner_in_candidates = opt.n1 == opt.candidate_floor || opt.n1 == opt.candidate_ceil;
  return opt;
}

}  // namespace sigmat
