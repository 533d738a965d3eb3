#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sigmat/graph.hpp"

namespace sigmat {

// S_{a,b}: a clique of size a joined completely to an independent set of size b.
struct SplitSpec {
  int clique_size = 1;
  int independent_size = 0;
};

// One part of a generalized complete k-partite graph: `size` vertices that
// induce an `inner_degree`-regular subgraph.
struct KPartitePart {
  int size = 1;
  int inner_degree = 0;
};

Graph make_split(int clique_size, int independent_size);
Graph make_split(SplitSpec spec);
Graph make_complete_bipartite(int n1, int n2);
Graph make_star(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_cycle(int n);

// Parts are joined completely to each other; part i carries a circulant
// r_i-regular graph (offsets 1..r_i/2, plus the antipode when r_i is odd).
// Throws std::domain_error when some r_i > n_i - 1 or r_i * n_i is odd.
Graph make_generalized_kpartite(std::span<const KPartitePart> parts);

// True iff every non-adjacent pair of distinct vertices has equal degree.
bool is_generalized_complete_kpartite(const Graph& g);

// sigma_t(S_{x, n-x}) = x (n - x) (n - 1 - x)^2, for 1 <= x <= n - 1.
std::int64_t sigma_t_split_formula(std::int64_t x, std::int64_t n);

// sigma_t(K_{n1,n2}) = n1 n2 (n1 - n2)^2.
std::int64_t sigma_t_bipartite_formula(std::int64_t n1, std::int64_t n2);

// The smaller interior critical point (5n - 2 - sqrt(9n^2 - 4n + 4)) / 8 of
// x -> sigma_t(S_{x,n-x}). `ceil` and `floor` are decided with integer
// square-root bracketing, never by rounding `value`.
struct CriticalPoint {
  double value = 0.0;
  std::int64_t ceil = 0;
  std::int64_t floor = 0;
};
CriticalPoint split_critical_point(std::int64_t n);

struct SplitOptimum {
  int n = 0;
  std::int64_t x = 0;      // clique size chosen by the mod-4 case rule
  std::int64_t value = 0;  // sigma_t_split_formula(x, n)
  std::int64_t scan_value = 0;
  std::vector<std::int64_t> scan_argmax;  // every y in [1, n-1] attaining scan_value
  bool agrees = false;
};

// Case rule: x = ceil(n/4) for n = 0, 3 (mod 4), x = floor(n/4) otherwise;
// cross-checked against a full scan over 1 <= y <= n - 1. Requires n >= 3.
SplitOptimum max_split_sigma_t(int n);

struct BipartiteOptimum {
  int n = 0;
  std::int64_t n1 = 0;  // smallest maximizer
  std::int64_t n2 = 0;
  std::int64_t value = 0;
  bool tie = false;
  std::vector<std::int64_t> tie_set;
  // floor and ceil of n (2 - sqrt 2) / 4, computed exactly.
  std::int64_t candidate_floor = 0;
  std::int64_t candidate_ceil = 0;
  bool winner_in_candidates = false;
};

// Direct scan over 1 <= n1 <= n/2 of sigma_t(K_{n1, n-n1}). Requires n >= 2.
BipartiteOptimum max_bipartite_split(int n);

}  // namespace sigmat
