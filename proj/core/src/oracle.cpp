#include "sigmat/oracle.hpp"

#include <algorithm>
#include <future>

#include "sigmat/extremal.hpp"
#include "sigmat/graph6.hpp"
#include "sigmat/invariants.hpp"

namespace sigmat {

namespace detail {

void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumeratedOrder) {
    throw LimitError("internal graph enumeration covers 1 <= n <= 7 (got " + std::to_string(n) +
                     "); feed larger orders as a graph6 stream");
  }
}

void tree_order_error(int n) {
  throw LimitError("tree enumeration covers 2 <= n <= 9 (got " + std::to_string(n) + ")");
}

PairTable pair_table(int n) {
  PairTable t;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t.size) {
      t.first[t.size] = static_cast<std::uint8_t>(i);
      t.second[t.size] = static_cast<std::uint8_t>(j);
    }
  }
  return t;
}

Graph graph_from_mask(int n, const PairTable& pairs, std::uint64_t mask) {
  Graph g(n);
  for (std::uint64_t r = mask; r != 0; r &= r - 1) {
    const int k = std::countr_zero(r);
    g.add_edge(pairs.first[k], pairs.second[k]);
  }
  return g;
}

}  // namespace detail

namespace {

std::string trim(std::string_view s) {
  const auto last = s.find_last_not_of(" \t\r\n");
  if (last == std::string_view::npos) return {};
  const auto first = s.find_first_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::optional<IngestedGraph> Graph6Reader::next() {
  std::string raw;
  while (std::getline(*in_, raw)) {
    ++line_;
    const std::string text = trim(raw);
    if (text.empty()) continue;
    try {
      return IngestedGraph{line_, parse_graph6(text)};
    } catch (const Graph6Error& e) {
      if (policy_ == BadLinePolicy::abort) throw IngestError(line_, e.what());
      diagnostics_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

std::vector<IngestedGraph> ingest_graph6(std::istream& in, BadLinePolicy policy,
                                         std::vector<Graph6Diagnostic>* diagnostics) {
  Graph6Reader reader(in, policy);
  std::vector<IngestedGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  if (diagnostics != nullptr) *diagnostics = reader.diagnostics();
  return out;
}

bool passes(GraphFilter filter, const Graph& g) {
  switch (filter) {
    case GraphFilter::none:
      return true;
    case GraphFilter::triangle_free:
      return is_triangle_free(g);
    case GraphFilter::tree:
      return is_tree(g);
    case GraphFilter::nonregular:
      return !is_regular(g);
  }
  return false;
}

std::string_view to_string(GraphFilter filter) {
  switch (filter) {
    case GraphFilter::none:
      return "none";
    case GraphFilter::triangle_free:
      return "triangle-free";
    case GraphFilter::tree:
      return "tree";
    case GraphFilter::nonregular:
      return "nonregular";
  }
  return "?";
}

std::optional<GraphFilter> parse_filter(std::string_view name) {
  for (GraphFilter f : {GraphFilter::none, GraphFilter::triangle_free, GraphFilter::tree,
                        GraphFilter::nonregular}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Objective objective) {
  return objective == Objective::maximize ? "max-sigma-t" : "min-sigma-t";
}

std::string_view to_string(ConjectureStatus status) {
  return status == ConjectureStatus::verified ? "verified" : "counterexample";
}

void WitnessSet::add(const Graph& g) {
  ++count_;
  if (items_.size() < kWitnessCap) {
    std::string code = encode_graph6(g);
    items_.insert(std::lower_bound(items_.begin(), items_.end(), code), std::move(code));
    return;
  }
  std::string code = encode_graph6(g);
  if (code < items_.back()) {
    items_.pop_back();
    items_.insert(std::lower_bound(items_.begin(), items_.end(), code), std::move(code));
  }
}

void WitnessSet::add(std::string code) {
  ++count_;
  if (items_.size() == kWitnessCap) {
    if (!(code < items_.back())) return;
    items_.pop_back();
  }
  items_.insert(std::lower_bound(items_.begin(), items_.end(), code), std::move(code));
}

void WitnessSet::merge(const WitnessSet& other) {
  std::vector<std::string> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::merge(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
             std::back_inserter(merged));
  if (merged.size() > kWitnessCap) merged.resize(kWitnessCap);
  items_ = std::move(merged);
  count_ += other.count_;
}

void WitnessSet::clear() {
  items_.clear();
  count_ = 0;
}

ExtremalSearch::ExtremalSearch(Objective objective, GraphPredicate filter)
    : objective_(objective), filter_(std::move(filter)) {}

void ExtremalSearch::offer(const Graph& g) {
  ++visited_;
  if (filter_ && !filter_(g)) return;
  ++matched_;
  const std::int64_t value = sigma_t(g);
  const bool better = !best_ || (objective_ == Objective::maximize ? value > *best_ : value < *best_);
  if (better) {
    best_ = value;
    witnesses_.clear();
  }
  if (value == *best_) witnesses_.add(g);
}

void ExtremalSearch::merge(const ExtremalSearch& other) {
  visited_ += other.visited_;
  matched_ += other.matched_;
  if (!other.best_) return;
  const bool better = !best_ || (objective_ == Objective::maximize ? *other.best_ > *best_
                                                                  : *other.best_ < *best_);
  if (better) {
    best_ = other.best_;
    witnesses_ = other.witnesses_;
  } else if (*other.best_ == *best_) {
    witnesses_.merge(other.witnesses_);
  }
}

SearchResult ExtremalSearch::result(std::string family, int n) const {
  if (!best_) throw std::domain_error("no graph in the family '" + family + "'");
  SearchResult r;
  r.family = std::move(family);
  r.n = n;
  r.objective = objective_;
  r.extreme_value = *best_;
  r.witnesses = witnesses_.items();
  r.tie_count = witnesses_.count();
  r.graphs_visited = visited_;
  r.family_size = matched_;
  return r;
}

SearchResult search_extremal(std::span<const Graph> graphs, Objective objective,
                             GraphPredicate filter, std::string family) {
  ExtremalSearch search(objective, std::move(filter));
  for (const Graph& g : graphs) search.offer(g);
  const int n = graphs.empty() ? 0 : graphs.front().order();
  return search.result(std::move(family), n);
}

namespace {

template <class Accumulator, class Run>
Accumulator run_sharded(unsigned shards, Run run) {
  if (shards <= 1) return run(Shard{0, 1});
  std::vector<std::future<Accumulator>> parts;
  parts.reserve(shards);
  for (unsigned i = 0; i < shards; ++i) {
    parts.push_back(std::async(std::launch::async, run, Shard{i, shards}));
  }
  Accumulator total = parts.front().get();
  for (unsigned i = 1; i < shards; ++i) total.merge(parts[i].get());
  return total;
}

std::string family_name(const char* base, GraphFilter filter) {
  std::string name = base;
  if (filter != GraphFilter::none) name += std::string(" (") + std::string(to_string(filter)) + ")";
  return name;
}

}  // namespace

SearchResult search_connected_graphs(int n, Objective objective, GraphFilter filter,
                                     unsigned shards) {
  detail::require_enumerable(n);
  auto search = run_sharded<ExtremalSearch>(shards, [=](Shard shard) {
    ExtremalSearch local(objective, [filter](const Graph& g) { return passes(filter, g); });
    enumerate_connected_graphs(n, [&](const Graph& g) { local.offer(g); }, shard);
    return local;
  });
  return search.result(family_name("connected graphs", filter), n);
}

SearchResult search_trees(int n, Objective objective) {
  ExtremalSearch search(objective);
  enumerate_trees(n, [&](const Graph& g) { search.offer(g); });
  return search.result("trees", n);
}

namespace {

class Conjecture1Accumulator {
 public:
  Conjecture1Accumulator(int n, std::int64_t optimum)
      : n_(n),
        optimum_(optimum),
        search_(Objective::maximize,
                [](const Graph& g) { return is_connected(g) && is_triangle_free(g); }) {}

  void offer(const Graph& g) {
    if (g.order() != n_) {
      throw std::invalid_argument("graph of order " + std::to_string(g.order()) +
                                  " in a conjecture check for n = " + std::to_string(n_));
    }
    ++checked_;
    search_.offer(g);
    if (sigma_t(g) > optimum_ && is_connected(g) && is_triangle_free(g)) counterexamples_.add(g);
  }

  void merge(const Conjecture1Accumulator& other) {
    checked_ += other.checked_;
    search_.merge(other.search_);
    counterexamples_.merge(other.counterexamples_);
  }

  ConjectureReport report() const {
    ConjectureReport r;
    r.conjecture_id = 1;
    r.n_min = r.n_max = n_;
    r.bipartite_optimum = optimum_;
    r.graphs_checked = checked_;
    r.counterexamples = counterexamples_.items();
    r.counterexample_count = counterexamples_.count();
    r.status = r.counterexample_count == 0 ? ConjectureStatus::verified
                                           : ConjectureStatus::counterexample;
    if (!search_.empty()) {
      const SearchResult best = search_.result("connected triangle-free graphs", n_);
      r.extreme_value = best.extreme_value;
      r.extremal_witnesses = best.witnesses;
      r.witness_count = best.tie_count;
    }
    return r;
  }

 private:
  int n_;
  std::int64_t optimum_;
  ExtremalSearch search_;
  WitnessSet counterexamples_;
  std::uint64_t checked_ = 0;
};

}  // namespace

ConjectureReport verify_conjecture1(int n, unsigned shards) {
  detail::require_enumerable(n);
  if (n < 2) throw LimitError("conjecture 1 check needs n >= 2");
  const std::int64_t optimum = max_bipartite_split(n).value;
  auto acc = run_sharded<Conjecture1Accumulator>(shards, [=](Shard shard) {
    Conjecture1Accumulator local(n, optimum);
    enumerate_connected_graphs(
        n,
        [&](const Graph& g) {
          if (is_triangle_free(g)) local.offer(g);
        },
        shard);
    return local;
  });
  return acc.report();
}

ConjectureReport verify_conjecture1(int n, Graph6Reader& stream) {
  if (n < 2) throw LimitError("conjecture 1 check needs n >= 2");
  Conjecture1Accumulator acc(n, max_bipartite_split(n).value);
  while (auto item = stream.next()) acc.offer(item->graph);
  return acc.report();
}

ConjectureReport verify_conjecture2(int n) {
  if (n < 3 || n > kMaxTreeOrder) {
    throw LimitError("conjecture 2 check covers 3 <= n <= 9 (got " + std::to_string(n) + ")");
  }
  WitnessSet counterexamples;
  WitnessSet equality;
  std::uint64_t checked = 0;
  enumerate_trees(n, [&](const Graph& t) {
    ++checked;
    const std::int64_t lhs = sigma_t(t);
    const std::int64_t rhs = (n - 2) * sigma(t);
    const bool equal = lhs == rhs;
    if (lhs > rhs || equal != is_path(t)) counterexamples.add(t);
    if (equal) equality.add(t);
  });
  ConjectureReport r;
  r.conjecture_id = 2;
  r.n_min = r.n_max = n;
  r.graphs_checked = checked;
  r.counterexamples = counterexamples.items();
  r.counterexample_count = counterexamples.count();
  r.status = r.counterexample_count == 0 ? ConjectureStatus::verified
                                         : ConjectureStatus::counterexample;
  r.extremal_witnesses = equality.items();
  r.witness_count = equality.count();
  return r;
}

bool identities_hold(const Graph& g) {
  const std::int64_t n = g.order();
  const std::int64_t m = g.size();
  const std::int64_t pair_sum = sigma_t_pair_sum(g);
  return pair_sum == n * zagreb_m1(g) - 4 * m * m &&
         Rational(pair_sum) == Rational(n * n) * degree_variance(g) &&
         sigma(g) == forgotten_f(g) - 2 * zagreb_m2(g);
}

IdentitySummary verify_identity_suite(std::span<const Graph> graphs) {
  IdentitySummary s;
  for (const Graph& g : graphs) {
    ++s.checked;
    if (identities_hold(g)) {
      ++s.passed;
    } else {
      ++s.failed;
      if (!s.first_failure) s.first_failure = encode_graph6(g);
    }
  }
  return s;
}

std::vector<Graph> random_graphs(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() & 1U) g.add_edge(u, v);
      }
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace sigmat
