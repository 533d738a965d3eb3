#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "sigmat/bounds.hpp"
#include "sigmat/extremal.hpp"
#include "sigmat/invariants.hpp"
#include "sigmat/oracle.hpp"
#include "sigmat/spectral.hpp"

namespace sigmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

std::string render_table(const InvariantReport& report);
std::string render_table(std::span<const BoundCheck> checks);
std::string render_table(const SpectralSummary& summary);
std::string render_table(const SplitOptimum& optimum);
std::string render_table(const BipartiteOptimum& optimum);
std::string render_table(const SearchResult& result);
std::string render_table(const ConjectureReport& report);
std::string render_table(const IdentitySummary& summary);

// "=" for a tight bound, "✓" / "✗" otherwise, "skip(<reason>)" when skipped.
std::string status_marker(const BoundCheck& check);

}  // namespace sigmat::cli
