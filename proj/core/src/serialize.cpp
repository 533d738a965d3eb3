#include "sigmat/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sigmat {

double round_significant(double value, int digits) {
  if (!std::isfinite(value)) return value;
  if (value == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  const double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string dump_canonical(const Json& j) { return j.dump(); }

namespace {

Json real(double v) { return round_significant(v); }

Json eigenvalues(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(real(std::abs(v) < 1e-12 ? 0.0 : v));
  return arr;
}

Json bound_value(const BoundValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return rational_json(*r);
  return real(std::get<double>(v));
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

void to_json(Json& j, const DegreeStats& s) {
  j = Json{{"degrees", s.degrees},         {"n", s.n},
           {"m", s.m},                     {"maxDegree", s.max_degree},
           {"minDegree", s.min_degree},    {"maxDegreeCount", s.max_degree_count},
           {"meanDegree", rational_json(s.mean_degree)}};
}

void to_json(Json& j, const InvariantReport& r) {
  j = Json{{"n", r.n},
           {"m", r.m},
           {"sigmaT", r.sigma_t},
           {"sigma", r.sigma},
           {"albertsonIrr", r.albertson_irr},
           {"m1", r.m1},
           {"m2", r.m2},
           {"forgotten", r.forgotten},
           {"variance", rational_json(r.variance)},
           {"meanDegree", rational_json(r.mean_degree)}};
}

void to_json(Json& j, const SpectralSummary& s) {
  j = Json{{"laplacianEigenvalues", eigenvalues(s.laplacian_eigenvalues)},
           {"adjacencyEigenvalues", eigenvalues(s.adjacency_eigenvalues)},
           {"energy", real(s.energy)},
           {"mu2", real(std::abs(s.mu2) < 1e-12 ? 0.0 : s.mu2)},
           {"muN", real(s.mu_n)}};
}

void to_json(Json& j, const BoundCheck& c) {
  j = Json{{"id", c.id}};
  if (c.skipped) {
    j["skipped"] = *c.skipped;
    return;
  }
  j["lhs"] = bound_value(c.lhs);
  j["rhs"] = bound_value(c.rhs);
  j["holds"] = c.holds;
  j["equality"] = c.equality;
  j["exact"] = c.exact;
  j["certificate"] = c.certificate;
}

void to_json(Json& j, const CriticalPoint& c) {
  j = Json{{"value", real(c.value)}, {"ceil", c.ceil}, {"floor", c.floor}};
}

void to_json(Json& j, const SplitOptimum& o) {
  j = Json{{"n", o.n},
           {"x", o.x},
           {"value", o.value},
           {"scanValue", o.scan_value},
           {"scanArgmax", o.scan_argmax},
           {"agrees", o.agrees}};
}

void to_json(Json& j, const BipartiteOptimum& o) {
  j = Json{{"n", o.n},
           {"n1", o.n1},
           {"n2", o.n2},
           {"value", o.value},
           {"tie", o.tie},
           {"tieSet", o.tie_set},
           {"candidates", {o.candidate_floor, o.candidate_ceil}},
           {"winnerInCandidates", o.winner_in_candidates}};
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"family", r.family},
           {"n", r.n},
           {"objective", std::string(to_string(r.objective))},
           {"extremeValue", r.extreme_value},
           {"witnesses", r.witnesses},
           {"tieCount", r.tie_count},
           {"graphsVisited", r.graphs_visited},
           {"familySize", r.family_size}};
}

void to_json(Json& j, const ConjectureReport& r) {
  j = Json{{"conjectureId", r.conjecture_id},
           {"nRange", {r.n_min, r.n_max}},
           {"status", std::string(to_string(r.status))},
           {"counterexamples", r.counterexamples},
           {"counterexampleCount", r.counterexample_count},
           {"graphsChecked", r.graphs_checked}};
  if (r.conjecture_id == 1) {
    j["extremalWitnesses"] = r.extremal_witnesses;
    j["witnessCount"] = r.witness_count;
    j["extremeValue"] = r.extreme_value;
    j["bipartiteOptimum"] = r.bipartite_optimum;
  } else {
    j["equalityWitnesses"] = r.extremal_witnesses;
    j["equalityCount"] = r.witness_count;
  }
}

void to_json(Json& j, const IdentitySummary& s) {
  j = Json{{"checked", s.checked},
           {"passed", s.passed},
           {"failed", s.failed},
           {"firstFailure", s.first_failure ? Json(*s.first_failure) : Json(nullptr)},
           {"seed", s.seed ? Json(*s.seed) : Json(nullptr)}};
}

}  // namespace sigmat
