#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <vector>

#include "strengthlab/graph.hpp"

namespace strengthlab {

/// Finds an injective, edge-preserving map from the pattern into the host.
///
/// Pattern vertices are placed in descending pattern-degree order (ties by
/// index); host candidates are tried in ascending index, restricted to common
/// neighbours of already-placed pattern neighbours and to sufficient degree.
/// The first map found in this order is returned, so results are deterministic.
class SubgraphMatcher {
 public:
  explicit SubgraphMatcher(const Graph& pattern) : pattern_(pattern) {
    const int k = pattern.order();
    order_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::array<int, kMaxOrder> pos{};
    for (int i = 0; i < k; ++i) pos[order_[i]] = i;
    earlier_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      for (Row r = pattern.row(order_[i]); r != 0; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (pos[u] < i) earlier_[i].push_back(pos[u]);
      }
    }
    pattern_size_ = pattern.size();
    pattern_max_degree_ = k == 0 ? 0 : pattern.degree(order_[0]);
  }

  const Graph& pattern() const noexcept { return pattern_; }

  /// Map indexed by pattern vertex, or nullopt when the host has no copy.
  std::optional<std::vector<int>> find(const Graph& host) const {
    std::array<int, kMaxOrder> image{};
    if (!search_possible(host) || !extend(host, 0, 0, image)) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(pattern_.order()));
    for (std::size_t i = 0; i < order_.size(); ++i) map[order_[i]] = image[i];
    return map;
  }

  bool contained_in(const Graph& host) const {
    std::array<int, kMaxOrder> image{};
    return search_possible(host) && extend(host, 0, 0, image);
  }

 private:
  bool search_possible(const Graph& host) const {
    if (pattern_.order() > host.order()) return false;
    if (pattern_size_ > host.size()) return false;
    return pattern_max_degree_ <= max_degree(host);
  }

  bool extend(const Graph& host, int depth, Row used, std::array<int, kMaxOrder>& image) const {
    if (depth == pattern_.order()) return true;
    Row cand = host.vertices() & ~used;
    for (int j : earlier_[depth]) cand &= host.row(image[j]);
    const int need = pattern_.degree(order_[depth]);
    for (; cand != 0; cand &= cand - 1) {
      const int c = std::countr_zero(cand);
      if (host.degree(c) < need) continue;
      image[depth] = c;
      if (extend(host, depth + 1, used | (Row{1} << c), image)) return true;
    }
    return false;
  }

  Graph pattern_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;
  int pattern_size_ = 0;
  int pattern_max_degree_ = 0;
};

inline std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern) {
  return SubgraphMatcher(pattern).find(host);
}

inline bool is_subgraph(const Graph& host, const Graph& pattern) {
  return SubgraphMatcher(pattern).contained_in(host);
}

}  // namespace strengthlab
