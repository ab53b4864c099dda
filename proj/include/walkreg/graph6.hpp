#pragma once

#include <string>
#include <string_view>

#include "walkreg/graph.hpp"

namespace walkreg {

// graph6, single-byte header only: byte 0 is 63+n, then the upper triangle
// in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant bit first, each byte offset by 63.

inline constexpr std::string_view kGraph6Marker = ">>graph6<<";

inline std::size_t graph6_body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Marker)) text.remove_prefix(kGraph6Marker.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::MalformedHeader, "empty graph6 record");

  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    throw Error(Errc::OversizeGraph, "multi-byte graph6 header (n > 62) is not supported");
  }
  if (head < 63 || head > 126) {
    throw Error(Errc::MalformedHeader, "header byte " + std::to_string(head) + " outside 63..125");
  }
  const int n = head - 63;
  if (n == 0) throw Error(Errc::MalformedHeader, "graph6 record encodes the empty graph (n = 0)");

  const std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) {
      throw Error(Errc::InvalidByte, "body byte " + std::to_string(c) + " at offset " +
                                         std::to_string(i + 1) + " outside 63..126");
    }
  }
  const std::size_t need = graph6_body_length(n);
  if (body.size() < need) {
    throw Error(Errc::TruncatedBody, "expected " + std::to_string(need) + " body bytes, got " +
                                         std::to_string(body.size()));
  }
  if (body.size() > need) {
    throw Error(Errc::TrailingData, "expected " + std::to_string(need) + " body bytes, got " +
                                        std::to_string(body.size()));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(body[k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.n();
  std::string out(1 + graph6_body_length(n), char(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

}  // namespace walkreg
