#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigmat/errors.hpp"
#include "sigmat/graph.hpp"

namespace sigmat {

// Internal enumeration limits; larger orders go through graph6 ingestion.
inline constexpr int kMaxEnumeratedOrder = 7;
inline constexpr int kMaxTreeOrder = 9;
inline constexpr std::size_t kWitnessCap = 16;

// The edge-subset space of order n is 2^C(n,2) masks; shard i of `count`
// owns the contiguous mask range [i * 2^C / count, (i + 1) * 2^C / count).
// For a power-of-two count this is a split on the high-order edge bits.
struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

namespace detail {

void require_enumerable(int n);
[[noreturn]] void tree_order_error(int n);

// Pair k of the graph6 upper-triangle order, j = 1..n-1, i = 0..j-1.
struct PairTable {
  int size = 0;
  std::array<std::uint8_t, 64> first{};
  std::array<std::uint8_t, 64> second{};
};
PairTable pair_table(int n);

Graph graph_from_mask(int n, const PairTable& pairs, std::uint64_t mask);

}  // namespace detail

// Every labeled graph on n vertices in the shard, connected or not.
template <class Visit>
std::uint64_t enumerate_graphs(int n, Visit&& visit, Shard shard = {}) {
  detail::require_enumerable(n);
  const detail::PairTable pairs = detail::pair_table(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size;
  const std::uint64_t begin = total * shard.index / shard.count;
  const std::uint64_t end = total * (shard.index + 1) / shard.count;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    visit(detail::graph_from_mask(n, pairs, mask));
  }
  return end - begin;
}

// Every labeled connected graph on n <= 7 vertices, exactly once. Returns
// the number of connected graphs visited.
template <class Visit>
std::uint64_t enumerate_connected_graphs(int n, Visit&& visit, Shard shard = {}) {
  std::uint64_t visited = 0;
  enumerate_graphs(
      n,
      [&](const Graph& g) {
        if (!is_connected(g)) return;
        ++visited;
        visit(g);
      },
      shard);
  return visited;
}

// All n^(n-2) labeled trees on 2 <= n <= 9 vertices, by Pruefer decoding.
template <class Visit>
std::uint64_t enumerate_trees(int n, Visit&& visit) {
  if (n < 2 || n > kMaxTreeOrder) detail::tree_order_error(n);
  const int len = n - 2;
  std::array<int, kMaxTreeOrder> code{};
  std::uint64_t visited = 0;
  while (true) {
    std::array<int, kMaxTreeOrder> degree{};
    for (int v = 0; v < n; ++v) degree[v] = 1;
    for (int p = 0; p < len; ++p) ++degree[code[p]];
    Graph g(n);
    for (int p = 0; p < len; ++p) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      g.add_edge(leaf, code[p]);
      --degree[leaf];
      --degree[code[p]];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          g.add_edge(a, v);
          break;
        }
      }
    }
    ++visited;
    visit(g);

    int p = len - 1;
    while (p >= 0 && code[p] == n - 1) code[p--] = 0;
    if (p < 0) break;
    ++code[p];
  }
  return visited;
}

enum class BadLinePolicy { abort, skip };

struct Graph6Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct IngestedGraph {
  std::size_t line = 0;
  Graph graph;
};

// Thrown under BadLinePolicy::abort.
class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Line-oriented graph6 stream. Blank lines are ignored; trailing whitespace
// and carriage returns are trimmed.
class Graph6Reader {
 public:
  Graph6Reader(std::istream& in, BadLinePolicy policy) : in_(&in), policy_(policy) {}

  std::optional<IngestedGraph> next();
  const std::vector<Graph6Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::istream* in_;
  BadLinePolicy policy_;
  std::size_t line_ = 0;
  std::vector<Graph6Diagnostic> diagnostics_;
};

std::vector<IngestedGraph> ingest_graph6(std::istream& in, BadLinePolicy policy,
                                         std::vector<Graph6Diagnostic>* diagnostics = nullptr);

enum class GraphFilter { none, triangle_free, tree, nonregular };

bool passes(GraphFilter filter, const Graph& g);
std::string_view to_string(GraphFilter filter);
std::optional<GraphFilter> parse_filter(std::string_view name);

using GraphPredicate = std::function<bool(const Graph&)>;

enum class Objective { maximize, minimize };
std::string_view to_string(Objective objective);

// Up to kWitnessCap lexicographically smallest graph6 strings, plus the exact
// number offered. Merging is associative and commutative.
class WitnessSet {
 public:
  void add(const Graph& g);
  void add(std::string code);
  void merge(const WitnessSet& other);
  void clear();

  const std::vector<std::string>& items() const noexcept { return items_; }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::vector<std::string> items_;
  std::uint64_t count_ = 0;
};

struct SearchResult {
  std::string family;
  int n = 0;
  Objective objective = Objective::maximize;
  std::int64_t extreme_value = 0;
  std::vector<std::string> witnesses;
  std::uint64_t tie_count = 0;
  std::uint64_t graphs_visited = 0;  // offered to the search, before filtering
  std::uint64_t family_size = 0;     // passed the filter
};

// Streaming extremum of sigma_t. Independent instances can be merged in any
// order with the same result.
class ExtremalSearch {
 public:
  explicit ExtremalSearch(Objective objective, GraphPredicate filter = {});

  void offer(const Graph& g);
  void merge(const ExtremalSearch& other);
  bool empty() const noexcept { return !best_.has_value(); }

  // Throws std::domain_error when no graph passed the filter.
  SearchResult result(std::string family, int n) const;

 private:
  Objective objective_;
  GraphPredicate filter_;
  std::optional<std::int64_t> best_;
  WitnessSet witnesses_;
  std::uint64_t visited_ = 0;
  std::uint64_t matched_ = 0;
};

SearchResult search_extremal(std::span<const Graph> graphs, Objective objective,
                             GraphPredicate filter, std::string family);

// Connected labeled graphs on n <= 7 vertices; shards run concurrently.
SearchResult search_connected_graphs(int n, Objective objective, GraphFilter filter,
                                     unsigned shards = 1);

// Labeled trees on n <= 9 vertices.
SearchResult search_trees(int n, Objective objective);

enum class ConjectureStatus { verified, counterexample };
std::string_view to_string(ConjectureStatus status);

struct ConjectureReport {
  int conjecture_id = 0;
  int n_min = 0;
  int n_max = 0;
  ConjectureStatus status = ConjectureStatus::verified;
  std::vector<std::string> counterexamples;
  std::uint64_t counterexample_count = 0;
  // Conjecture 1: maximizers of sigma_t. Conjecture 2: equality cases.
  std::vector<std::string> extremal_witnesses;
  std::uint64_t witness_count = 0;
  std::int64_t extreme_value = 0;      // Conjecture 1: max sigma_t in the family
  std::int64_t bipartite_optimum = 0;  // Conjecture 1: best complete bipartite value
  std::uint64_t graphs_checked = 0;
};

// Among connected triangle-free graphs on n vertices no sigma_t exceeds the
// best complete bipartite graph. Internal enumeration needs 2 <= n <= 7.
ConjectureReport verify_conjecture1(int n, unsigned shards = 1);
// Same comparison over an external stream; graphs of another order are
// rejected with std::invalid_argument, disconnected or triangle-containing
// graphs are ignored.
ConjectureReport verify_conjecture1(int n, Graph6Reader& stream);

// sigma_t(T) <= (n - 2) sigma(T) over all labeled trees, with equality
// exactly on paths. 3 <= n <= 9.
ConjectureReport verify_conjecture2(int n);

struct IdentitySummary {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;
  std::optional<std::uint64_t> seed;
};

// sigma_t (pair sum) = n M1 - 4 m^2, sigma_t = n^2 Var, sigma = F - 2 M2.
bool identities_hold(const Graph& g);

IdentitySummary verify_identity_suite(std::span<const Graph> graphs);

// G(n, 1/2) with an explicit 64-bit seed.
std::vector<Graph> random_graphs(int n, std::size_t count, std::uint64_t seed);

}  // namespace sigmat
