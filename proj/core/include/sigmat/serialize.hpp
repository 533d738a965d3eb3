#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sigmat/bounds.hpp"
#include "sigmat/extremal.hpp"
#include "sigmat/graph.hpp"
#include "sigmat/invariants.hpp"
#include "sigmat/oracle.hpp"
#include "sigmat/rational.hpp"
#include "sigmat/spectral.hpp"

// JSON forms of the report types. Keys are camelCase and emitted in sorted
// order; floating-point values are rounded to 12 significant digits so that
// dump -> parse -> dump is byte-stable.
namespace sigmat {

using Json = nlohmann::json;

double round_significant(double value, int digits = 12);

// Compact single-line dump with sorted keys.
std::string dump_canonical(const Json& j);

// {"num": p, "den": q} in lowest terms, q > 0.
Json rational_json(const Rational& r);
void to_json(Json& j, const DegreeStats& s);
void to_json(Json& j, const InvariantReport& r);
// Eigenvalues within 1e-12 of zero are written as 0.
void to_json(Json& j, const SpectralSummary& s);
void to_json(Json& j, const BoundCheck& c);
void to_json(Json& j, const CriticalPoint& c);
void to_json(Json& j, const SplitOptimum& o);
void to_json(Json& j, const BipartiteOptimum& o);
void to_json(Json& j, const SearchResult& r);
void to_json(Json& j, const ConjectureReport& r);
void to_json(Json& j, const IdentitySummary& s);

}  // namespace sigmat
