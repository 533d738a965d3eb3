#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "sigmat/rational.hpp"

namespace sigmat {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Row v of the adjacency matrix
// is a 64-bit set, so n is capped at 64.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int n);
  Graph(int n, std::initializer_list<Edge> edges);
  Graph(int n, std::span<const Edge> edges);

  // Builds a graph from adjacency rows, validating symmetry, loops and range.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  int degree(int v) const { return std::popcount(rows_[check(v)]); }
  std::uint64_t neighbors(int v) const { return rows_[check(v)]; }
  bool adjacent(int u, int v) const { return (rows_[check(u)] >> check(v)) & 1U; }

  // Degrees indexed by vertex.
  std::vector<int> degrees() const;
  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Adding an existing edge is a no-op; loops and out-of-range endpoints throw.
  void add_edge(int u, int v);

  // All vertices, as a bitmask.
  std::uint64_t vertex_mask() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  int check(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

struct DegreeStats {
  std::vector<int> degrees;  // non-increasing
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  int max_degree_count = 0;
  Rational mean_degree{0};
};

DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
bool is_triangle_free(const Graph& g);
std::optional<std::array<int, 3>> find_triangle(const Graph& g);
bool is_bipartite(const Graph& g);
// Edgeless graphs count as K_{0,n}.
bool is_complete_bipartite(const Graph& g);
bool is_tree(const Graph& g);
// P_n: a tree whose maximum degree is at most 2.
bool is_path(const Graph& g);
// K_{1,n-1}; P_1, P_2 and P_3 are stars as well.
bool is_star(const Graph& g);

}  // namespace sigmat
