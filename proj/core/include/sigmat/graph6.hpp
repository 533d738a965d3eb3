#pragma once

#include <string>
#include <string_view>

#include "sigmat/errors.hpp"
#include "sigmat/graph.hpp"

namespace sigmat {

// Largest order expressible with the one-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

// Decodes one short-form graph6 record (no trailing newline). An optional
// ">>graph6<<" prefix is accepted. Throws Graph6Error naming the byte offset.
Graph parse_graph6(std::string_view text);

// Throws UnsupportedSizeError when the order exceeds kMaxGraph6Order.
std::string encode_graph6(const Graph& g);

}  // namespace sigmat
