#include "sigmat/invariants.hpp"

#include <bit>
#include <cstdlib>

namespace sigmat {

namespace {

template <class EdgeTerm>
std::int64_t sum_over_edges(const Graph& g, EdgeTerm term) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    const std::int64_t du = g.degree(u);
    for (std::uint64_t r = g.neighbors(u) >> u >> 1; r != 0; r &= r - 1) {
      const int v = u + 1 + std::countr_zero(r);
      total += term(du, static_cast<std::int64_t>(g.degree(v)));
    }
  }
  return total;
}

}  // namespace

std::int64_t zagreb_m1(const Graph& g) {
  std::int64_t total = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    total += d * d;
  }
  return total;
}

std::int64_t forgotten_f(const Graph& g) {
  std::int64_t total = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    total += d * d * d;
  }
  return total;
}

std::int64_t zagreb_m2(const Graph& g) {
  return sum_over_edges(g, [](std::int64_t a, std::int64_t b) { return a * b; });
}

std::int64_t sigma(const Graph& g) {
  return sum_over_edges(g, [](std::int64_t a, std::int64_t b) { return (a - b) * (a - b); });
}

std::int64_t albertson_irr(const Graph& g) {
  return sum_over_edges(g, [](std::int64_t a, std::int64_t b) { return std::abs(a - b); });
}

std::int64_t sigma_t(const Graph& g) {
  const std::int64_t n = g.order();
  const std::int64_t m = g.size();
  return n * zagreb_m1(g) - 4 * m * m;
}

std::int64_t sigma_t_pair_sum(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const std::int64_t diff = g.degree(u) - g.degree(v);
      total += diff * diff;
    }
  }
  return total;
}

Rational degree_variance(const Graph& g) {
  const Rational mean(2 * static_cast<std::int64_t>(g.size()), g.order());
  Rational total(0);
  for (int v = 0; v < g.order(); ++v) {
    const Rational dev = Rational(g.degree(v)) - mean;
    total += dev * dev;
  }
  return total / Rational(g.order());
}

InvariantReport full_report(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  r.m = g.size();
  r.sigma_t = sigma_t(g);
  r.sigma = sigma(g);
  r.albertson_irr = albertson_irr(g);
  r.m1 = zagreb_m1(g);
  r.m2 = zagreb_m2(g);
  r.forgotten = forgotten_f(g);
  r.variance = degree_variance(g);
  r.mean_degree = Rational(2 * static_cast<std::int64_t>(r.m), r.n);
  return r;
}

}  // namespace sigmat
