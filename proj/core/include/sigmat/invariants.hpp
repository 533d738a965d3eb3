#pragma once

#include <cstdint>

#include "sigmat/graph.hpp"
#include "sigmat/rational.hpp"

namespace sigmat {

// Degree-based irregularity indices. None of these require connectivity.

// Sum of (d(u) - d(v))^2 over all unordered vertex pairs, evaluated in O(n)
// through sigma_t = n * M1 - 4 m^2.
std::int64_t sigma_t(const Graph& g);

// The same quantity by the O(n^2) pair sum; kept as a cross-check.
std::int64_t sigma_t_pair_sum(const Graph& g);

// Sum of (d(u) - d(v))^2 over edges.
std::int64_t sigma(const Graph& g);

// Sum of |d(u) - d(v)| over edges.
std::int64_t albertson_irr(const Graph& g);

std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);
// Sum of d(u)^3.
std::int64_t forgotten_f(const Graph& g);

// Mean squared deviation of the degrees from 2m/n, evaluated from the
// definition in exact arithmetic.
Rational degree_variance(const Graph& g);

struct InvariantReport {
  int n = 0;
  int m = 0;
  std::int64_t sigma_t = 0;
  std::int64_t sigma = 0;
  std::int64_t albertson_irr = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t forgotten = 0;
  Rational variance{0};
  Rational mean_degree{0};
};

InvariantReport full_report(const Graph& g);

}  // namespace sigmat
