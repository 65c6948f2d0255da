#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strengthlab/error.hpp"
#include "strengthlab/graph.hpp"

namespace strengthlab {

inline constexpr int kCanonMaxOrder = 16;

/// Relabelled adjacency rows of a graph under its canonical labelling.
/// Two graphs share a form exactly when they are isomorphic.
struct CanonicalForm {
  int order = 0;
  std::array<std::uint16_t, kCanonMaxOrder> rows{};

  Graph graph() const { return Graph::from_rows_unchecked(order, rows.begin()); }

  /// Upper-triangle adjacency bits, column order, as a '0'/'1' string.
  std::string bits() const {
    std::string out;
    for (int j = 1; j < order; ++j) {
      for (int i = 0; i < j; ++i) out.push_back(((rows[i] >> j) & 1U) ? '1' : '0');
    }
    return out;
  }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.order);
    for (int i = 0; i < f.order; ++i) {
      h ^= f.rows[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

namespace canon {

using Mask = std::uint32_t;
using Rows = std::array<Mask, kCanonMaxOrder>;

/// Ordered partition of positions 0..n-1. A cell starting at position s covers
/// positions [s, end[s]) and holds the vertices lab[s..end[s]).
struct Partition {
  int n = 0;
  std::array<std::uint8_t, kCanonMaxOrder> lab{};
  std::array<std::uint8_t, kCanonMaxOrder> end{};
  Mask starts = 0;

  static Partition unit(int n) {
    Partition p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    if (n > 0) {
      p.starts = 1;
      p.end[0] = static_cast<std::uint8_t>(n);
    }
    return p;
  }

  bool discrete() const noexcept { return std::popcount(starts) == n; }

  Mask cell(int s) const noexcept {
    Mask m = 0;
    for (int p = s; p < end[s]; ++p) m |= Mask{1} << lab[p];
    return m;
  }

  int last_cell() const noexcept { return 31 - std::countl_zero(starts); }

  /// Moves v to the front of its cell and splits it off as a singleton.
  /// Returns the position of the new singleton cell.
  int individualize(int v) noexcept {
    int p = 0;
    while (lab[p] != v) ++p;
    int s = p;
    while (((starts >> s) & 1U) == 0) --s;
    if (end[s] - s == 1) return s;
    std::swap(lab[s], lab[p]);
    end[s + 1] = end[s];
    end[s] = static_cast<std::uint8_t>(s + 1);
    starts |= Mask{1} << (s + 1);
    return s;
  }
};

/// Refines p to the coarsest equitable partition finer than it, splitting by
/// neighbour counts into each active splitter cell. Fragments are ordered by
/// ascending count, so the result depends only on the graph and the input
/// cell structure.
inline void refine(const Rows& rows, Partition& p, Mask active) {
  std::array<std::uint8_t, kCanonMaxOrder> cnt{};
  while (active != 0 && !p.discrete()) {
    const int w = std::countr_zero(active);
    active &= active - 1;
    const Mask splitter = p.cell(w);
    for (Mask cs = p.starts; cs != 0; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      const int e = p.end[c];
      if (e - c == 1) continue;
      bool uniform = true;
      for (int q = c; q < e; ++q) {
        cnt[q] = static_cast<std::uint8_t>(std::popcount(rows[p.lab[q]] & splitter));
        uniform = uniform && cnt[q] == cnt[c];
      }
      if (uniform) continue;
      for (int q = c + 1; q < e; ++q) {
        const std::uint8_t key = cnt[q];
        const std::uint8_t v = p.lab[q];
        int r = q;
        while (r > c && cnt[r - 1] > key) {
          cnt[r] = cnt[r - 1];
          p.lab[r] = p.lab[r - 1];
          --r;
        }
        cnt[r] = key;
        p.lab[r] = v;
      }
      const bool was_active = ((active >> c) & 1U) != 0;
      int largest = c;
      int largest_size = 0;
      Mask fragments = 0;
      for (int f = c; f < e;) {
        int g = f + 1;
        while (g < e && cnt[g] == cnt[f]) ++g;
        p.end[f] = static_cast<std::uint8_t>(g);
        fragments |= Mask{1} << f;
        if (g - f > largest_size) {
          largest = f;
          largest_size = g - f;
        }
        f = g;
      }
      p.starts |= fragments;
      active |= was_active ? fragments : (fragments & ~(Mask{1} << largest));
    }
  }
}

inline Rows to_rows(const Graph& g) {
  if (g.order() > kCanonMaxOrder) {
    throw BudgetError("canonical labelling is limited to order " + std::to_string(kCanonMaxOrder));
  }
  Rows r{};
  for (int v = 0; v < g.order(); ++v) r[v] = static_cast<Mask>(g.row(v));
  return r;
}

/// Search tree over individualise-refine nodes. Leaves are discrete
/// partitions; the canonical form is the lexicographically largest relabelled
/// graph. Automorphisms discovered at equal leaves prune children in the same
/// orbit of the pointwise stabiliser of the current path and trigger jumps
/// back to the deepest ancestor shared with the matching leaf.
class Search {
 public:
  Search(const Rows& rows, int n) : rows_(rows), n_(n) {}

  CanonicalForm run(Partition p, Mask active) {
    refine(rows_, p, active);
    node(p, 0);
    CanonicalForm f;
    f.order = n_;
    for (int i = 0; i < n_; ++i) f.rows[i] = static_cast<std::uint16_t>(best_[i]);
    return f;
  }

  /// Canonical labelling of the best leaf: vertex best_lab()[i] gets label i.
  const std::array<std::uint8_t, kCanonMaxOrder>& best_lab() const noexcept { return best_lab_; }
  std::size_t automorphisms_found() const noexcept { return autos_.size(); }
  const std::vector<std::array<std::uint8_t, kCanonMaxOrder>>& automorphisms() const noexcept {
    return autos_;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  int node(Partition& p, int depth) {
    if (p.discrete()) return leaf(p, depth);
    int s = 0;
    for (Mask cs = p.starts; cs != 0; cs &= cs - 1) {
      s = std::countr_zero(cs);
      if (p.end[s] - s > 1) break;
    }
    std::array<std::uint8_t, kCanonMaxOrder> members{};
    const int size = p.end[s] - s;
    for (int i = 0; i < size; ++i) members[i] = p.lab[s + i];
    std::sort(members.begin(), members.begin() + size);

    Mask explored = 0;
    for (int i = 0; i < size; ++i) {
      const int v = members[i];
      if (explored != 0 && (orbit_of(v, depth) & explored) != 0) continue;
      Partition child = p;
      const int cell = child.individualize(v);
      if (path_.size() <= static_cast<std::size_t>(depth)) path_.resize(depth + 1);
      path_[depth] = static_cast<std::uint8_t>(v);
      refine(rows_, child, Mask{1} << cell);
      const int jump = node(child, depth + 1);
      explored |= Mask{1} << v;
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, int depth) {
    std::array<std::uint8_t, kCanonMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
    Rows r{};
    for (int i = 0; i < n_; ++i) {
      Mask out = 0;
      for (Mask m = rows_[p.lab[i]]; m != 0; m &= m - 1) out |= Mask{1} << pos[std::countr_zero(m)];
      r[i] = out;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = best_ = r;
      first_lab_ = best_lab_ = p.lab;
      first_path_.assign(path_.begin(), path_.begin() + depth);
      best_path_ = first_path_;
      return kNoJump;
    }
    if (r == first_) {
      record(p.lab, first_lab_);
      return common_prefix(first_path_, depth);
    }
    const auto cmp = compare(r, best_);
    if (cmp == 0) {
      record(p.lab, best_lab_);
      return common_prefix(best_path_, depth);
    }
    if (cmp > 0) {
      best_ = r;
      best_lab_ = p.lab;
      best_path_.assign(path_.begin(), path_.begin() + depth);
    }
    return kNoJump;
  }

  int compare(const Rows& a, const Rows& b) const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  int common_prefix(const std::vector<std::uint8_t>& other, int depth) const noexcept {
    int k = 0;
    const int limit = std::min<int>(depth, static_cast<int>(other.size()));
    while (k < limit && other[k] == path_[k]) ++k;
    return k;
  }

  // lab_a[i] -> lab_b[i] maps one leaf onto another with the same relabelled graph.
  void record(const std::array<std::uint8_t, kCanonMaxOrder>& from,
              const std::array<std::uint8_t, kCanonMaxOrder>& to) {
    std::array<std::uint8_t, kCanonMaxOrder> gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos_.push_back(gamma);
  }

  // Orbit of v under the found automorphisms fixing path_[0..depth) pointwise.
  Mask orbit_of(int v, int depth) const {
    Mask orbit = Mask{1} << v;
    Mask frontier = orbit;
    while (frontier != 0) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (const auto& g : autos_) {
        bool fixes = true;
        for (int k = 0; k < depth && fixes; ++k) fixes = g[path_[k]] == path_[k];
        if (!fixes) continue;
        const Mask y = Mask{1} << g[x];
        if ((orbit & y) == 0) {
          orbit |= y;
          frontier |= y;
        }
      }
    }
    return orbit;
  }

  Rows rows_;
  int n_;
  bool have_leaf_ = false;
  Rows first_{};
  Rows best_{};
  std::array<std::uint8_t, kCanonMaxOrder> first_lab_{};
  std::array<std::uint8_t, kCanonMaxOrder> best_lab_{};
  std::vector<std::uint8_t> path_;
  std::vector<std::uint8_t> first_path_;
  std::vector<std::uint8_t> best_path_;
  std::vector<std::array<std::uint8_t, kCanonMaxOrder>> autos_;
};

/// Canonical form of a graph whose partition has already been refined.
inline CanonicalForm from_refined(const Rows& rows, int n, const Partition& p) {
  Search search(rows, n);
  return search.run(p, 0);
}

/// True when the graph has no automorphism besides the identity.
inline bool rigid(const Rows& rows, int n, const Partition& refined) {
  if (refined.discrete()) return true;
  Search search(rows, n);
  search.run(refined, 0);
  return search.automorphisms_found() == 0;
}

}  // namespace canon

inline CanonicalForm canonical_form(const Graph& g) {
  const canon::Rows rows = canon::to_rows(g);
  canon::Search search(rows, g.order());
  return search.run(canon::Partition::unit(g.order()), g.order() > 0 ? 1U : 0U);
}

/// Permutation p with g.relabeled(p) equal to canonical_form(g).graph().
inline std::vector<int> canonical_labeling(const Graph& g) {
  const canon::Rows rows = canon::to_rows(g);
  canon::Search search(rows, g.order());
  search.run(canon::Partition::unit(g.order()), g.order() > 0 ? 1U : 0U);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) perm[i] = search.best_lab()[i];
  return perm;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace strengthlab
