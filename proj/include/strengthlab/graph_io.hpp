#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "strengthlab/error.hpp"
#include "strengthlab/graph.hpp"

namespace strengthlab {

// graph6: an order word, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte offset by 63.
// Orders 0..62 use one byte; 63..64 use '~' followed by three bytes.

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("graph6: byte outside the printable range 63..126");
  }
  auto value = [](char c) { return static_cast<int>(static_cast<unsigned char>(c)) - 63; };

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw InputError("graph6: unsupported order encoding");
    if (text.size() < 4) throw InputError("graph6: truncated order word");
    n = (value(text[1]) << 12) | (value(text[2]) << 6) | value(text[3]);
    pos = 4;
    if (n < 63) throw InputError("graph6: non-canonical order word");
  }
  if (n > kMaxOrder) throw InputError("graph6: order " + std::to_string(n) + " exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InputError("graph6: expected " + std::to_string(bytes) + " payload bytes, got " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int tail = value(text.back());
    if ((tail & ((1 << (6 - bits % 6)) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  s = trim(s);
  while (!s.empty()) {
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end == s.data()) {
      throw InputError("edge list: expected an integer near '" + std::string(s) + "'");
    }
    out.push_back(v);
    s = trim(s.substr(static_cast<std::size_t>(end - s.data())));
  }
  return out;
}

}  // namespace detail

/// Parses "n; u v; u v; ..." with 1-based vertex labels.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::size_t stop = semi == std::string_view::npos ? text.size() : semi;
    fields.push_back(detail::trim(text.substr(start, stop - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (fields.empty() || fields[0].empty()) throw InputError("edge list: missing order");
  const auto head = detail::parse_ints(fields[0]);
  if (head.size() != 1) throw InputError("edge list: first field must be the order");
  const int n = head[0];
  if (n < 0 || n > kMaxOrder) throw InputError("edge list: order outside [0,64]");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].empty()) continue;
    const auto uv = detail::parse_ints(fields[i]);
    if (uv.size() != 2) throw InputError("edge list: each edge needs exactly two endpoints");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) {
      throw InputError("edge list: endpoint outside [1," + std::to_string(n) + "]");
    }
    edges.emplace_back(uv[0] - 1, uv[1] - 1);
  }
  return Graph::from_edges(n, edges);
}

inline std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (auto [u, v] : g.edges()) out += ";" + std::to_string(u + 1) + " " + std::to_string(v + 1);
  return out;
}

}  // namespace strengthlab
