#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strengthlab/error.hpp"

namespace strengthlab {

inline constexpr int kMaxOrder = 64;

/// One adjacency row: bit u of row v is set iff u ~ v.
using Row = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr Row low_bits(int n) noexcept {
  return n >= 64 ? ~Row{0} : (Row{1} << n) - 1;
}

/// Simple undirected graph of order at most 64 with one bitset row per vertex.
///
/// Graphs are values. Every constructor keeps the rows symmetric and loop-free,
/// and rows beyond the order are always zero so equality is a plain compare.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order) : n_(checked_order(order)) {}

  static Graph from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order) {
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") for order " + std::to_string(order));
      }
      if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
      g.set_edge(u, v);
    }
    return g;
  }

  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from adjacency rows, validating symmetry and the absence of loops.
  static Graph from_rows(int order, std::span<const Row> rows) {
    Graph g(order);
    if (rows.size() != static_cast<std::size_t>(order)) {
      throw InputError("row count does not match order");
    }
    const Row mask = low_bits(order);
    for (int v = 0; v < order; ++v) {
      if ((rows[v] & ~mask) != 0) throw InputError("adjacency row has bits beyond the order");
      if ((rows[v] >> v) & 1U) throw InputError("loop edge at vertex " + std::to_string(v));
      g.rows_[v] = rows[v];
    }
    for (int v = 0; v < order; ++v) {
      for (Row r = rows[v]; r != 0; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (((rows[u] >> v) & 1U) == 0) throw InputError("adjacency rows are not symmetric");
      }
    }
    return g;
  }

  /// Trusted construction for hot paths whose rows are symmetric by construction.
  template <class RowIt>
  static Graph from_rows_unchecked(int order, RowIt first) {
    Graph g;
    g.n_ = order;
    for (int v = 0; v < order; ++v, ++first) g.rows_[v] = static_cast<Row>(*first);
    return g;
  }

  int order() const noexcept { return n_; }

  int size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  bool empty_edges() const noexcept {
    for (int v = 0; v < n_; ++v) {
      if (rows_[v] != 0) return false;
    }
    return true;
  }

  Row row(int v) const noexcept { return rows_[v]; }
  std::span<const Row> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  bool adjacent(int u, int v) const noexcept { return ((rows_[u] >> v) & 1U) != 0; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }

  /// Vertex set as a bit mask.
  Row vertices() const noexcept { return low_bits(n_); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (Row r = rows_[u] & ~low_bits(u + 1); r != 0; r &= r - 1) {
        out.emplace_back(u, std::countr_zero(r));
      }
    }
    return out;
  }

  /// Graph whose vertex v is this graph's vertex perm[v].
  Graph relabeled(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw InputError("permutation size mismatch");
    std::array<int, kMaxOrder> pos{};
    Row seen = 0;
    for (int i = 0; i < n_; ++i) {
      const int v = perm[i];
      if (v < 0 || v >= n_ || ((seen >> v) & 1U)) throw InputError("not a permutation");
      seen |= Row{1} << v;
      pos[v] = i;
    }
    Graph g(n_);
    for (int i = 0; i < n_; ++i) {
      Row out = 0;
      for (Row r = rows_[perm[i]]; r != 0; r &= r - 1) out |= Row{1} << pos[std::countr_zero(r)];
      g.rows_[i] = out;
    }
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int checked_order(int order) {
    if (order < 0 || order > kMaxOrder) {
      throw InputError("order " + std::to_string(order) + " outside [0,64]");
    }
    return order;
  }

  void set_edge(int u, int v) noexcept {
    rows_[u] |= Row{1} << v;
    rows_[v] |= Row{1} << u;
  }

  int n_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

inline Graph complement(const Graph& g) {
  std::array<Row, kMaxOrder> rows{};
  const Row all = g.vertices();
  for (int v = 0; v < g.order(); ++v) rows[v] = all & ~g.row(v) & ~(Row{1} << v);
  return Graph::from_rows_unchecked(g.order(), rows.begin());
}

/// Block-diagonal union; h's vertices follow g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw InputError("combined order " + std::to_string(n) + " exceeds 64");
  std::array<Row, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.row(v) << g.order();
  return Graph::from_rows_unchecked(n, rows.begin());
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) { return complement(Graph(n)); }

inline Graph complete_bipartite(int s, int t) {
  if (s < 0 || t < 0) throw InputError("part sizes must be nonnegative");
  return complement(disjoint_union(complete(s), complete(t)));
}

/// K_{1,k-1}, centre at vertex 0.
inline Graph star(int k) {
  if (k < 1) throw InputError("star needs at least one vertex");
  std::vector<Edge> e;
  for (int v = 1; v < k; ++v) e.emplace_back(0, v);
  return Graph::from_edges(k, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, e);
}

/// k disjoint copies of h.
inline Graph copies(int k, const Graph& h) {
  Graph g(0);
  for (int i = 0; i < k; ++i) g = disjoint_union(g, h);
  return g;
}

/// F_k on vertices v_1..v_k (index i-1 holds v_i): v_i ~ v_j exactly when
/// i <= floor(k/2) and i < j <= k+1-i. F_1 is K_1.
inline Graph build_fk(int k) {
  if (k < 1 || k > kMaxOrder) throw InputError("F_k needs k in [1,64], got " + std::to_string(k));
  std::vector<Edge> e;
  for (int i = 1; i <= k / 2; ++i) {
    for (int j = i + 1; j <= k + 1 - i; ++j) e.emplace_back(i - 1, j - 1);
  }
  return Graph::from_edges(k, e);
}

inline int degree(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
  return g.degree(v);
}

inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("minimum degree of the null graph is undefined");
  int d = kMaxOrder;
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace detail {

// Branch on a vertex of maximum degree inside `cand`; vertices of degree <= 1
// within cand are always safe to take.
inline int max_independent(const Graph& g, Row cand, int size, int best) {
  if (cand == 0) return std::max(best, size);
  if (size + std::popcount(cand) <= best) return best;
  int pick = -1;
  int pick_deg = -1;
  for (Row r = cand; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    const int d = std::popcount(g.row(v) & cand);
    if (d <= 1) return max_independent(g, cand & ~g.row(v) & ~(Row{1} << v), size + 1, best);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  const Row bit = Row{1} << pick;
  best = max_independent(g, cand & ~g.row(pick) & ~bit, size + 1, best);
  return max_independent(g, cand & ~bit, size, best);
}

inline int max_matching(const Graph& g, Row free) {
  if (free == 0) return 0;
  const int cap = std::popcount(free) / 2;
  const int v = std::countr_zero(free);
  const Row rest = free & ~(Row{1} << v);
  int best = max_matching(g, rest);
  for (Row r = g.row(v) & rest; r != 0 && best < cap; r &= r - 1) {
    const int u = std::countr_zero(r);
    best = std::max(best, 1 + max_matching(g, rest & ~(Row{1} << u)));
  }
  return best;
}

}  // namespace detail

/// beta(G): size of a largest independent set.
inline int independence_number(const Graph& g) {
  if (g.order() == 0) return 0;
  return detail::max_independent(g, g.vertices(), 0, 0);
}

/// beta_1(G): size of a largest matching, by exhaustive search over matchings
/// (lowest free vertex either stays unmatched or pairs with a free neighbour).
inline int matching_number(const Graph& g) {
  if (g.order() > 24) throw BudgetError("exhaustive matching search limited to order 24");
  return detail::max_matching(g, g.vertices());
}

inline bool has_one_factor(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

/// A bijection from vertices to [1,n] together with the largest edge label it
/// induces. The strength is absent for edgeless graphs.
class Numbering {
 public:
  Numbering() = default;

  static Numbering of(const Graph& g, std::vector<int> labels) {
    const int n = g.order();
    if (labels.size() != static_cast<std::size_t>(n)) {
      throw InputError("numbering has " + std::to_string(labels.size()) + " labels for order " +
                       std::to_string(n));
    }
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int l : labels) {
      if (l < 1 || l > n || used[l]) throw InputError("labels are not a permutation of [1,n]");
      used[l] = true;
    }
    Numbering f;
    f.labels_ = std::move(labels);
    for (auto [u, v] : g.edges()) {
      const int s = f.labels_[u] + f.labels_[v];
      if (!f.strength_ || s > *f.strength_) f.strength_ = s;
    }
    return f;
  }

  const std::vector<int>& labels() const noexcept { return labels_; }
  std::optional<int> strength_value() const noexcept { return strength_; }

  friend bool operator==(const Numbering&, const Numbering&) = default;

 private:
  std::vector<int> labels_;
  std::optional<int> strength_;
};

}  // namespace strengthlab
