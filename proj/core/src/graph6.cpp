#include "sigmat/graph6.hpp"

#include <algorithm>

namespace sigmat {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

constexpr std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  if (text.size() <= base) throw Graph6Error("empty graph6 record", base);

  const int head = static_cast<unsigned char>(text[base]);
  if (head == 126) throw Graph6Error("long-form graph6 header is not supported", base);
  if (head < kBias || head > 126) throw Graph6Error("invalid graph6 order byte", base);
  const int n = head - kBias;
  if (n < 1) throw Graph6Error("graph6 order must be at least 1", base);

  const std::size_t bits = pair_count(n);
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t body = base + 1;
  if (text.size() != body + bytes) {
    throw Graph6Error("expected " + std::to_string(bytes) + " data bytes for order " +
                          std::to_string(n) + ", found " + std::to_string(text.size() - body),
                      std::min(text.size(), body + bytes));
  }

  for (std::size_t k = 0; k < bytes; ++k) {
    const int c = static_cast<unsigned char>(text[body + k]);
    if (c < kBias || c > 126) throw Graph6Error("byte outside graph6 range 63..126", body + k);
  }
  const std::size_t pad = bytes * 6 - bits;
  if (pad > 0) {
    const int last = static_cast<unsigned char>(text[body + bytes - 1]) - kBias;
    if ((last & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits", body + bytes - 1);
    }
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[body + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw UnsupportedSizeError("graph6 short form supports at most 62 vertices, got " +
                               std::to_string(n));
  }
  const std::size_t bits = pair_count(n);
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (char& c : out) c = static_cast<char>(c + kBias);
  return out;
}

}  // namespace sigmat
