#include "sigmat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "sigmat/invariants.hpp"

namespace sigmat {

namespace {

BoundCheck exact_check(std::string id, Rational lhs, Rational rhs) {
  BoundCheck c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.exact = true;
  c.holds = lhs <= rhs;
  c.equality = lhs == rhs;
  return c;
}

BoundCheck real_check(std::string id, double lhs, double rhs, double tol) {
  BoundCheck c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.exact = false;
  c.holds = lhs <= rhs + tol;
  c.equality = std::abs(lhs - rhs) <= tol;
  return c;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " requires a connected graph");
}

void require_edges(const Graph& g, const char* what) {
  if (g.size() == 0) throw PreconditionError(std::string(what) + " requires at least one edge");
}

// delta' when the degrees below Delta are all equal, i.e. the multiset is
// {Delta x k, delta' x (n - k)}.
std::optional<int> two_valued_low_degree(const DegreeStats& s) {
  const int k = s.max_degree_count;
  if (k == s.n) return std::nullopt;
  const int rest = 2 * s.m - k * s.max_degree;
  if (rest % (s.n - k) != 0) return std::nullopt;
  const int low = rest / (s.n - k);
  for (int i = k; i < s.n; ++i) {
    if (s.degrees[i] != low) return std::nullopt;
  }
  return low;
}

Rational exact_variance(std::span<const Rational> a) {
  Rational mean(0);
  for (const Rational& v : a) mean += v;
  mean /= Rational(static_cast<std::int64_t>(a.size()));
  Rational total(0);
  for (const Rational& v : a) total += (v - mean) * (v - mean);
  return total / Rational(static_cast<std::int64_t>(a.size()));
}

std::string degree_note(const char* prefix, int delta, int k, int low, int n) {
  std::ostringstream os;
  os << prefix << " {" << delta << " x " << k << ", " << low << " x " << (n - k) << "}";
  return os.str();
}

}  // namespace

BoundCheck check_triangle_free_upper(const Graph& g) {
  if (const auto t = find_triangle(g)) {
    std::ostringstream os;
    os << "triangle-free bound requires a triangle-free graph; found triangle {" << (*t)[0] << ", "
       << (*t)[1] << ", " << (*t)[2] << "}";
    throw PreconditionError(os.str());
  }
  const std::int64_t n = g.order();
  const std::int64_t m = g.size();
  BoundCheck c = exact_check(bound_id::kTriangleFreeUpper, Rational(sigma_t(g)),
                             Rational(m * (n * n - 4 * m)));
  if (c.equality) {
    c.certificate = is_complete_bipartite(g) ? "complete bipartite"
                                             : "equality without complete bipartite structure";
  }
  return c;
}

BoundCheck check_sigma_t_upper_degree(const Graph& g) {
  require_connected(g, "degree upper bound");
  require_edges(g, "degree upper bound");
  const DegreeStats s = degree_stats(g);
  const double n = s.n;
  const double m = s.m;
  const double root_delta = std::sqrt(static_cast<double>(s.min_degree));
  const double big_delta = s.max_degree;
  const double rhs = 4.0 * (std::sqrt(2.0 * m * n) - n * root_delta) *
                     (n * n * big_delta * big_delta + 4.0 * m * m) / (n * root_delta);
  const std::int64_t st = sigma_t(g);
  BoundCheck c = real_check(bound_id::kDegreeUpper, static_cast<double>(st), rhs,
                            spectral_tolerance(s.n, s.max_degree));
  if (c.equality && st == 0) c.certificate = "regular (both sides vanish)";
  return c;
}

BoundCheck check_energy_upper(const Graph& g) {
  require_connected(g, "energy bound");
  require_edges(g, "energy bound");
  return check_energy_upper(g, laplacian_spectrum(g));
}

namespace {

double improved_mcclelland(const DegreeStats& s, std::int64_t st) {
  const double n = s.n;
  const double m = s.m;
  const double big_delta = s.max_degree;
  return std::sqrt(2.0 * m * n) - n * std::sqrt(static_cast<double>(s.min_degree)) *
                                      static_cast<double>(st) /
                                      (4.0 * (n * n * big_delta * big_delta + 4.0 * m * m));
}

}  // namespace

BoundCheck check_energy_upper(const Graph& g, const SpectralSummary& spectrum) {
  require_connected(g, "energy bound");
  require_edges(g, "energy bound");
  const DegreeStats s = degree_stats(g);
  const std::int64_t st = sigma_t(g);
  BoundCheck c = real_check(bound_id::kEnergyUpper, spectrum.energy,
                            improved_mcclelland(s, st), spectral_tolerance(s.n, s.max_degree));
  if (st == 0) c.certificate = "sigma_t = 0, reduces to sqrt(2mn)";
  return c;
}

BoundCheck check_energy_improvement(const Graph& g) {
  require_connected(g, "energy improvement");
  require_edges(g, "energy improvement");
  const DegreeStats s = degree_stats(g);
  const std::int64_t st = sigma_t(g);
  BoundCheck c = real_check(bound_id::kEnergyImprovement, improved_mcclelland(s, st),
                            std::sqrt(2.0 * s.m * s.n), spectral_tolerance(s.n, s.max_degree));
  // The correction term is n sqrt(delta) sigma_t / (...) with delta >= 1, so it
  // vanishes exactly when sigma_t does.
  c.equality = st == 0;
  if (c.equality) c.certificate = "sigma_t = 0";
  return c;
}

BoundCheck check_lower_kmax(const Graph& g) {
  require_connected(g, "k-max lower bound");
  const DegreeStats s = degree_stats(g);
  const std::int64_t k = s.max_degree_count;
  if (k == s.n) throw PreconditionError("k-max lower bound requires a non-regular graph");
  const std::int64_t gap = static_cast<std::int64_t>(s.n) * s.max_degree - 2 * s.m;
  BoundCheck c = exact_check(bound_id::kKmaxLower, Rational(k * gap * gap, s.n - k),
                             Rational(sigma_t(g)));
  if (c.equality) {
    const auto low = two_valued_low_degree(s);
    c.certificate = low ? degree_note("two-valued degrees", s.max_degree, s.max_degree_count, *low, s.n)
                        : "equality without two-valued degree multiset";
  }
  return c;
}

BoundCheck check_lower_simple(const Graph& g) {
  require_connected(g, "simple lower bound");
  if (g.order() < 2) throw PreconditionError("simple lower bound requires n >= 2");
  const DegreeStats s = degree_stats(g);
  const std::int64_t gap = static_cast<std::int64_t>(s.n) * s.max_degree - 2 * s.m;
  BoundCheck c = exact_check(bound_id::kSimpleLower, Rational(gap * gap, s.n - 1),
                             Rational(sigma_t(g)));
  if (c.equality) {
    const auto low = two_valued_low_degree(s);
    if (s.max_degree_count == s.n) {
      c.certificate = "regular (both sides vanish)";
    } else if (s.max_degree_count == 1 && low) {
      c.certificate = degree_note("one maximum-degree vertex:", s.max_degree, 1, *low, s.n);
    } else {
      c.certificate = "equality without the stated degree structure";
    }
  }
  return c;
}

BoundCheck check_tree_lower(const Graph& g) {
  if (g.order() < 2 || !is_tree(g)) throw PreconditionError("tree lower bound requires a tree with n >= 2");
  BoundCheck c = exact_check(bound_id::kTreeLower, Rational(2 * g.order() - 4), Rational(sigma_t(g)));
  if (c.equality) c.certificate = is_path(g) ? "path" : "equality on a non-path tree";
  return c;
}

BoundCheck check_nonregular_min(const Graph& g) {
  if (is_regular(g)) throw PreconditionError("non-regular minimum requires a non-regular graph");
  const std::int64_t n = g.order();
  const std::int64_t bound = n % 2 == 1 ? n - 1 : 2 * n - 4;
  BoundCheck c = exact_check(bound_id::kNonregularMin, Rational(bound), Rational(sigma_t(g)));
  if (c.equality) c.certificate = "attained";
  return c;
}

std::pair<BoundCheck, BoundCheck> check_laplacian_sandwich(const Graph& g) {
  require_connected(g, "Laplacian sandwich");
  return check_laplacian_sandwich(g, laplacian_spectrum(g));
}

std::pair<BoundCheck, BoundCheck> check_laplacian_sandwich(const Graph& g,
                                                           const SpectralSummary& spectrum) {
  require_connected(g, "Laplacian sandwich");
  const double tol = spectral_tolerance(g);
  const std::int64_t st = sigma_t(g);
  const std::int64_t s = sigma(g);
  if (st == 0) {
    BoundCheck upper = real_check(bound_id::kSandwichMuN, 0.0, 0.0, tol);
    BoundCheck lower = real_check(bound_id::kSandwichMu2, 0.0, 0.0, tol);
    upper.certificate = lower.certificate = "degenerate 0 <= 0 (regular)";
    return {upper, lower};
  }
  const double n = g.order();
  BoundCheck upper = real_check(bound_id::kSandwichMuN, static_cast<double>(s),
                                spectrum.mu_n / n * static_cast<double>(st), tol);
  BoundCheck lower = real_check(bound_id::kSandwichMu2, static_cast<double>(st),
                                n / spectrum.mu2 * static_cast<double>(s), tol);
  if (upper.equality) upper.certificate = "degree vector attains mu_n";
  if (lower.equality) lower.certificate = "degree vector attains mu_2";
  return {upper, lower};
}

BoundCheck check_variance_shift(std::span<const std::int64_t> sequence, std::size_t i,
                                std::size_t j) {
  if (!(i < j && j < sequence.size())) {
    throw PreconditionError("variance shift requires positions i < j inside the sequence");
  }
  if (!std::is_sorted(sequence.begin(), sequence.end(), std::greater<>())) {
    throw PreconditionError("variance shift requires a non-increasing sequence");
  }
  std::vector<Rational> before(sequence.begin(), sequence.end());
  std::vector<Rational> after = before;
  after[i] += 1;
  after[j] -= 1;
  const Rational var_before = exact_variance(before);
  const Rational var_after = exact_variance(after);
  BoundCheck c = exact_check(bound_id::kVarianceShift, var_before, var_after);
  const Rational increment = Rational(static_cast<std::int64_t>(sequence.size())) * (var_after - var_before);
  std::ostringstream os;
  os << "n * (Var(B) - Var(A)) = " << increment.numerator();
  if (increment.denominator() != 1) os << '/' << increment.denominator();
  c.certificate = os.str();
  return c;
}

BoundCheck check_amgm_refinement(double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw PreconditionError("AM-GM refinement requires x, y > 0");
  const double lhs = 2.0 + (x - y) * (x - y) / (2.0 * (x * x + y * y));
  const double rhs = std::sqrt(x / y) + std::sqrt(y / x);
  BoundCheck c = real_check(bound_id::kAmGmRefinement, lhs, rhs, 1e-12 * std::max(1.0, rhs));
  c.equality = x == y;
  if (c.equality) c.certificate = "x = y";
  return c;
}

BoundCheck check_bhatia_davis(std::span<const Rational> sequence, Rational upper, Rational lower) {
  if (sequence.empty()) throw PreconditionError("Bhatia-Davis requires a nonempty sequence");
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (sequence[k] < lower || sequence[k] > upper) {
      throw PreconditionError("Bhatia-Davis: entry " + std::to_string(k) + " lies outside [m, M]");
    }
  }
  Rational mean(0);
  for (const Rational& v : sequence) mean += v;
  mean /= Rational(static_cast<std::int64_t>(sequence.size()));
  BoundCheck c = exact_check(bound_id::kBhatiaDavis, exact_variance(sequence),
                             (upper - mean) * (mean - lower));
  if (c.equality) {
    const bool two_valued = std::all_of(sequence.begin(), sequence.end(), [&](const Rational& v) {
      return v == upper || v == lower;
    });
    c.certificate = two_valued ? "every entry equals M or m" : "equality with an interior entry";
  }
  return c;
}

std::vector<BoundCheck> check_all(const Graph& g) {
  std::vector<BoundCheck> out;
  auto skip = [&](const char* id, std::string reason) {
    BoundCheck c;
    c.id = id;
    c.skipped = std::move(reason);
    out.push_back(std::move(c));
  };
  auto attempt = [&](const char* id, const std::function<BoundCheck()>& run) {
    try {
      out.push_back(run());
    } catch (const PreconditionError& e) {
      skip(id, e.what());
    }
  };

  const bool connected = is_connected(g);
  std::optional<SpectralSummary> spectrum;
  if (connected) spectrum = laplacian_spectrum(g);

  attempt(bound_id::kDegreeUpper, [&] { return check_sigma_t_upper_degree(g); });
  attempt(bound_id::kEnergyImprovement, [&] { return check_energy_improvement(g); });
  attempt(bound_id::kEnergyUpper, [&] {
    require_connected(g, "energy bound");
    return check_energy_upper(g, *spectrum);
  });
  attempt(bound_id::kKmaxLower, [&] { return check_lower_kmax(g); });
  attempt(bound_id::kNonregularMin, [&] { return check_nonregular_min(g); });
  if (connected) {
    auto [upper, lower] = check_laplacian_sandwich(g, *spectrum);
    out.push_back(std::move(lower));
    out.push_back(std::move(upper));
  } else {
    skip(bound_id::kSandwichMu2, "Laplacian sandwich requires a connected graph");
    skip(bound_id::kSandwichMuN, "Laplacian sandwich requires a connected graph");
  }
  attempt(bound_id::kSimpleLower, [&] { return check_lower_simple(g); });
  attempt(bound_id::kTreeLower, [&] { return check_tree_lower(g); });
  attempt(bound_id::kTriangleFreeUpper, [&] { return check_triangle_free_upper(g); });

  std::stable_sort(out.begin(), out.end(),
                   [](const BoundCheck& a, const BoundCheck& b) { return a.id < b.id; });
  return out;
}

}  // namespace sigmat
