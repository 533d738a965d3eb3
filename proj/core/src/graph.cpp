#include "sigmat/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace sigmat {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const std::uint64_t all = g.vertex_mask();
  for (int u = 0; u < g.n_; ++u) {
    if (rows[u] & ~all) throw std::invalid_argument("neighbor index out of range");
    if ((rows[u] >> u) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  int twice_m = 0;
  for (int u = 0; u < g.n_; ++u) {
    for (std::uint64_t r = rows[u]; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (!((rows[v] >> u) & 1U)) {
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) +
                                    " and " + std::to_string(v));
      }
    }
    g.rows_[u] = rows[u];
    twice_m += std::popcount(rows[u]);
  }
  g.m_ = twice_m / 2;
  return g;
}

int Graph::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return v;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = std::popcount(rows_[v]);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t r = rows_[u] >> u; r != 0; r &= r - 1) {
      out.push_back({u, u + std::countr_zero(r)});
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if ((rows_[u] >> v) & 1U) return;
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
  ++m_;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.n = g.order();
  s.m = g.size();
  s.degrees = g.degrees();
  std::sort(s.degrees.begin(), s.degrees.end(), std::greater<>());
  s.max_degree = s.degrees.front();
  s.min_degree = s.degrees.back();
  s.max_degree_count =
      static_cast<int>(std::count(s.degrees.begin(), s.degrees.end(), s.max_degree));
  s.mean_degree = Rational(2 * s.m, s.n);
  return s;
}

bool is_connected(const Graph& g) {
  const std::uint64_t all = g.vertex_mask();
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool is_regular(const Graph& g) {
  const int d0 = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d0) return false;
  }
  return true;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (std::uint64_t r = g.neighbors(u) >> u >> 1; r != 0; r &= r - 1) {
      const int v = u + 1 + std::countr_zero(r);
      const std::uint64_t common = g.neighbors(u) & g.neighbors(v);
      if (common != 0) {
        std::array<int, 3> t{u, v, std::countr_zero(common)};
        std::sort(t.begin(), t.end());
        return t;
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

// 2-colouring by breadth-first search; returns the colour-1 class or nothing.
std::optional<std::uint64_t> two_colouring(const Graph& g) {
  std::uint64_t visited = 0;
  std::uint64_t side = 0;
  for (int s = 0; s < g.order(); ++s) {
    if ((visited >> s) & 1U) continue;
    std::uint64_t frontier = std::uint64_t{1} << s;
    visited |= frontier;
    bool colour_one = false;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      if (next & frontier) return std::nullopt;
      colour_one = !colour_one;
      const std::uint64_t same_colour = colour_one ? side : (visited & ~side);
      if ((next & visited & ~same_colour) != 0) return std::nullopt;
      frontier = next & ~visited;
      visited |= frontier;
      if (colour_one) side |= frontier;
    }
  }
  return side;
}

}  // namespace

bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

bool is_complete_bipartite(const Graph& g) {
  if (g.size() == 0) return true;
  if (!is_connected(g)) return false;
  const auto side = two_colouring(g);
  if (!side) return false;
  const long a = std::popcount(*side);
  const long b = g.order() - a;
  return g.size() == a * b;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_star(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

}  // namespace sigmat
