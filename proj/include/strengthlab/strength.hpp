#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strengthlab/error.hpp"
#include "strengthlab/graph.hpp"
#include "strengthlab/subgraph.hpp"

namespace strengthlab {

enum class StrengthMethod { BruteForce, FkCharacterization };

inline const char* to_string(StrengthMethod m) {
  return m == StrengthMethod::BruteForce ? "brute-force" : "fk-characterization";
}

struct StrengthResult {
  int value = 0;
  Numbering witness;
  StrengthMethod method = StrengthMethod::BruteForce;
  /// Largest k with F_k inside the complement of G minus its isolated
  /// vertices; set for the characterization.
  std::optional<int> max_fk_in_complement;
  /// Set when the witness came from the F_k embedding rather than a search.
  bool witness_from_embedding = false;
};

/// Orders up to this use exhaustive search for witnesses.
inline constexpr int kBruteForceMaxOrder = 10;

inline int strength_of_numbering(const Graph& g, const Numbering& f) {
  if (g.empty_edges()) throw EmptyGraphError();
  const Numbering checked = Numbering::of(g, f.labels());
  return *checked.strength_value();
}

namespace detail {

/// Branch and bound over numberings: labels n, n-1, ... are handed out in
/// turn, each to some unplaced vertex taken in ascending-degree order.
class StrengthBranchAndBound {
 public:
  explicit StrengthBranchAndBound(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) seq_[v] = v;
    std::stable_sort(seq_.begin(), seq_.begin() + n_,
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
  }

  int solve() {
    best_ = 2 * n_;
    place(n_, 0, 0);
    return best_;
  }

 private:
  void place(int label, Row placed, int current) {
    if (label == 0) {
      best_ = current;
      return;
    }
    for (int i = 0; i < n_; ++i) {
      const int v = seq_[i];
      if ((placed >> v) & 1U) continue;
      int worst = current;
      for (Row r = g_.row(v) & placed; r != 0; r &= r - 1) {
        worst = std::max(worst, label + labels_[std::countr_zero(r)]);
      }
      if (worst >= best_) continue;
      const Row now = placed | (Row{1} << v);
      labels_[v] = label;
      // Every placed vertex with an unplaced neighbour will see a label >= 1.
      int bound = worst;
      for (Row r = now; r != 0; r &= r - 1) {
        const int w = std::countr_zero(r);
        if ((g_.row(w) & ~now) != 0) bound = std::max(bound, labels_[w] + 1);
      }
      if (bound >= best_) continue;
      place(label - 1, now, worst);
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxOrder> seq_{};
  std::array<int, kMaxOrder> labels_{};
  int best_ = 0;
};

/// Lexicographically smallest label array whose edge sums all stay <= bound.
class LexMinNumbering {
 public:
  LexMinNumbering(const Graph& g, int bound) : g_(g), n_(g.order()), bound_(bound) {}

  std::optional<std::vector<int>> solve() {
    labels_.assign(static_cast<std::size_t>(n_), 0);
    if (!assign(0, 0)) return std::nullopt;
    return labels_;
  }

 private:
  bool assign(int v, Row used_labels) {
    if (v == n_) return true;
    int cap = n_;
    for (Row r = g_.row(v) & low_bits(v); r != 0; r &= r - 1) {
      cap = std::min(cap, bound_ - labels_[std::countr_zero(r)]);
    }
    for (int l = 1; l <= cap; ++l) {
      if ((used_labels >> l) & 1U) continue;
      labels_[v] = l;
      const Row now = used_labels | (Row{1} << l);
      if (feasible(v + 1, now) && assign(v + 1, now)) return true;
    }
    labels_[v] = 0;
    return false;
  }

  // Vertices from `from` on only see caps from assigned neighbours; handing
  // the smallest free labels to the smallest caps decides whether any
  // completion can respect them.
  bool feasible(int from, Row used_labels) const {
    std::array<int, kMaxOrder> caps{};
    int k = 0;
    for (int u = from; u < n_; ++u) {
      int cap = n_;
      for (Row r = g_.row(u) & low_bits(from); r != 0; r &= r - 1) {
        cap = std::min(cap, bound_ - labels_[std::countr_zero(r)]);
      }
      caps[k++] = cap;
    }
    std::sort(caps.begin(), caps.begin() + k);
    int i = 0;
    for (int l = 1; l <= n_ && i < k; ++l) {
      if ((used_labels >> l) & 1U) continue;
      if (caps[i] < l) return false;
      ++i;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int bound_;
  std::vector<int> labels_;
};

inline const SubgraphMatcher& fk_matcher(int k) {
  static const std::vector<SubgraphMatcher> matchers = [] {
    std::vector<SubgraphMatcher> out;
    out.reserve(kMaxOrder);
    for (int j = 1; j <= kMaxOrder; ++j) out.emplace_back(build_fk(j));
    return out;
  }();
  return matchers[static_cast<std::size_t>(k - 1)];
}

inline void require_edges(const Graph& g) {
  if (g.empty_edges()) throw EmptyGraphError();
}

/// Subgraph induced by the vertices of positive degree; `kept` receives their
/// indices in g.
inline Graph without_isolated(const Graph& g, std::vector<int>& kept) {
  kept.clear();
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) {
      pos[v] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(static_cast<int>(kept.size()), edges);
}

}  // namespace detail

/// Exact strength by exhaustive search; the witness is the lexicographically
/// smallest optimal label array.
inline StrengthResult strength_bruteforce(const Graph& g) {
  detail::require_edges(g);
  if (g.order() > 12) throw BudgetError("brute-force strength is limited to order 12");
  StrengthResult r;
  r.method = StrengthMethod::BruteForce;
  r.value = detail::StrengthBranchAndBound(g).solve();
  auto labels = detail::LexMinNumbering(g, r.value).solve();
  if (!labels) throw std::logic_error("no numbering attains the branch-and-bound optimum");
  r.witness = Numbering::of(g, std::move(*labels));
  return r;
}

/// Largest k in [1, order] with F_k a subgraph of h. F_k sits inside F_{k+1},
/// so containment is monotone in k and a binary search suffices.
inline int max_fk_subgraph(const Graph& h) {
  if (h.order() < 1) throw InputError("max F_k needs at least one vertex");
  int lo = 1;
  int hi = h.order();
  // F_k has floor(k/2)*ceil(k/2) edges and a vertex of degree k-1.
  const int m = h.size();
  const int delta = max_degree(h);
  while (hi > 1 && ((hi / 2) * ((hi + 1) / 2) > m || hi - 1 > delta)) --hi;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (detail::fk_matcher(mid).contained_in(h)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

/// str(G) via the F_k characterization only (no witness). Isolated vertices
/// are dropped first: they never change the strength, and with them present
/// the characterization cannot report values below the order.
inline int strength_value(const Graph& g) {
  detail::require_edges(g);
  std::vector<int> kept;
  const Graph core = detail::without_isolated(g, kept);
  return 2 * core.order() - max_fk_subgraph(complement(core));
}

/// Numbering from an embedding of F_k in the complement: the image of v_i gets
/// label n+1-i, the remaining vertices get 1..n-k by index. Every edge of G
/// then sums to at most 2n-k.
inline Numbering numbering_from_embedding(const Graph& g, const std::vector<int>& fk_image) {
  const int n = g.order();
  const int k = static_cast<int>(fk_image.size());
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) labels[fk_image[i]] = n - i;
  int next = 1;
  for (int v = 0; v < n; ++v) {
    if (labels[v] == 0) labels[v] = next++;
  }
  return Numbering::of(g, std::move(labels));
}

/// str(G) = 2n - k*, k* the largest k with F_k inside the complement, both
/// taken after dropping isolated vertices. The witness is searched for up to
/// order 10 and taken from the embedding above otherwise, with isolated
/// vertices on the top labels.
inline StrengthResult strength(const Graph& g) {
  detail::require_edges(g);
  std::vector<int> kept;
  const Graph core = detail::without_isolated(g, kept);
  const Graph comp = complement(core);
  const int k = max_fk_subgraph(comp);
  StrengthResult r;
  r.method = StrengthMethod::FkCharacterization;
  r.max_fk_in_complement = k;
  r.value = 2 * core.order() - k;
  if (g.order() <= kBruteForceMaxOrder) {
    auto labels = detail::LexMinNumbering(g, r.value).solve();
    if (!labels) throw std::logic_error("no numbering attains the characterized strength");
    r.witness = Numbering::of(g, std::move(*labels));
  } else {
    const auto image = detail::fk_matcher(k).find(comp);
    if (!image) throw std::logic_error("F_k embedding vanished");
    const Numbering inner = numbering_from_embedding(core, *image);
    std::vector<int> labels(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) labels[kept[i]] = inner.labels()[i];
    int next = core.order() + 1;
    for (int& l : labels) {
      if (l == 0) l = next++;
    }
    r.witness = Numbering::of(g, std::move(labels));
    r.witness_from_embedding = true;
  }
  if (r.witness.strength_value() != r.value) {
    throw std::logic_error("witness numbering does not attain the strength");
  }
  return r;
}

/// n + delta(G); requires no isolated vertices.
inline int strength_lower_bound(const Graph& g) {
  const int delta = min_degree(g);
  if (delta < 1) throw InputError("strength lower bound needs minimum degree at least 1");
  return g.order() + delta;
}

/// 2n - beta(G).
inline int strength_upper_bound_beta(const Graph& g) {
  detail::require_edges(g);
  return 2 * g.order() - independence_number(g);
}

/// Whether adding m isolated vertices leaves the brute-force strength unchanged.
inline bool strength_isolated_invariance_check(const Graph& g, int m) {
  if (m < 1) throw InputError("number of isolated vertices must be positive");
  if (min_degree(g) < 1) throw InputError("graph must have no isolated vertices");
  return strength_bruteforce(disjoint_union(g, Graph(m))).value == strength_bruteforce(g).value;
}

}  // namespace strengthlab
