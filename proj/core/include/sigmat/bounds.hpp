#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sigmat/errors.hpp"
#include "sigmat/graph.hpp"
#include "sigmat/rational.hpp"
#include "sigmat/spectral.hpp"

namespace sigmat {

// Exact when the inequality is algebraic in the degrees, floating point when
// radicals or eigenvalues enter.
using BoundValue = std::variant<Rational, double>;

// One instance of an inequality lhs <= rhs.
//
// For real-valued checks `holds` allows the spectral tolerance and `equality`
// is advisory. Skipped entries (only produced by check_all) carry a reason
// and have holds == equality == false.
struct BoundCheck {
  std::string id;
  BoundValue lhs = Rational(0);
  BoundValue rhs = Rational(0);
  bool holds = false;
  bool equality = false;
  bool exact = true;
  std::string certificate;
  std::optional<std::string> skipped;
};

namespace bound_id {
inline constexpr const char* kDegreeUpper = "degree-upper";
inline constexpr const char* kEnergyImprovement = "energy-improvement";
inline constexpr const char* kEnergyUpper = "energy-upper";
inline constexpr const char* kKmaxLower = "kmax-lower";
inline constexpr const char* kNonregularMin = "nonregular-min";
inline constexpr const char* kSandwichMu2 = "sandwich-mu2";
inline constexpr const char* kSandwichMuN = "sandwich-mun";
inline constexpr const char* kSimpleLower = "simple-lower";
inline constexpr const char* kTreeLower = "tree-lower";
inline constexpr const char* kTriangleFreeUpper = "triangle-free-upper";
inline constexpr const char* kVarianceShift = "variance-shift";
inline constexpr const char* kAmGmRefinement = "amgm-refinement";
inline constexpr const char* kBhatiaDavis = "bhatia-davis";
}  // namespace bound_id

// sigma_t <= m (n^2 - 4m) for triangle-free g; equality iff complete bipartite.
BoundCheck check_triangle_free_upper(const Graph& g);

// sigma_t <= 4 (sqrt(2mn) - n sqrt(delta)) (n^2 Delta^2 + 4 m^2) / (n sqrt(delta)).
// Connected, m >= 1.
BoundCheck check_sigma_t_upper_degree(const Graph& g);

// E(G) <= sqrt(2mn) - n sqrt(delta) sigma_t / (4 (n^2 Delta^2 + 4 m^2)).
// Connected, m >= 1.
BoundCheck check_energy_upper(const Graph& g);
BoundCheck check_energy_upper(const Graph& g, const SpectralSummary& spectrum);

// The right-hand side above never exceeds sqrt(2mn); equal iff sigma_t = 0.
BoundCheck check_energy_improvement(const Graph& g);

// (k / (n - k)) (n Delta - 2m)^2 <= sigma_t, k = number of maximum-degree
// vertices. Connected and not regular.
BoundCheck check_lower_kmax(const Graph& g);

// (n Delta - 2m)^2 / (n - 1) <= sigma_t. Connected, n >= 2.
BoundCheck check_lower_simple(const Graph& g);

// 2n - 4 <= sigma_t for trees; equality iff path.
BoundCheck check_tree_lower(const Graph& g);

// (n - 1 if n odd, 2n - 4 otherwise) <= sigma_t for non-regular g.
BoundCheck check_nonregular_min(const Graph& g);

// first:  sigma   <= (mu_n / n) sigma_t
// second: sigma_t <= (n / mu_2) sigma
// Connected. Regular graphs report the degenerate 0 <= 0.
std::pair<BoundCheck, BoundCheck> check_laplacian_sandwich(const Graph& g);
std::pair<BoundCheck, BoundCheck> check_laplacian_sandwich(const Graph& g,
                                                           const SpectralSummary& spectrum);

// Moving one unit from position j to position i < j of a non-increasing
// sequence (0-based positions) strictly raises the variance, by exactly
// (2 (a_i - a_j) + 2) / n. lhs = Var(before), rhs = Var(after).
BoundCheck check_variance_shift(std::span<const std::int64_t> sequence, std::size_t i,
                                std::size_t j);

// 2 + (x - y)^2 / (2 (x^2 + y^2)) <= sqrt(x/y) + sqrt(y/x) for x, y > 0.
BoundCheck check_amgm_refinement(double x, double y);

// Var(a) <= (M - mean)(mean - m) when m <= a_j <= M; equality iff every
// entry is M or m.
BoundCheck check_bhatia_davis(std::span<const Rational> sequence, Rational upper, Rational lower);

// Every applicable graph check, ordered by id. Precondition failures become
// skipped entries instead of exceptions.
std::vector<BoundCheck> check_all(const Graph& g);

}  // namespace sigmat
