#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "strengthlab/canonical.hpp"
#include "strengthlab/error.hpp"
#include "strengthlab/graph.hpp"
#include "strengthlab/parallel.hpp"

namespace strengthlab {

inline constexpr int kEnumMaxOrder = 12;
inline constexpr int kCursorVersion = 1;

enum class Visit { Continue, Stop };

using GraphVisitor = std::function<Visit(const Graph&)>;

/// Position in the augmentation tree. `path[i]` is the neighbourhood mask given
/// to the vertex added when growing from order i+1 to order i+2. A path of full
/// length (order-1) names a leaf; a shorter nonempty path names a whole subtree.
/// Everything up to and including the named node, in visit order, is done.
/// An empty path means nothing is done, except at order 1 where `visited`
/// distinguishes the single leaf.
struct EnumCursor {
  int version = kCursorVersion;
  int order = 0;
  std::vector<std::uint32_t> path;
  std::uint64_t visited = 0;

  friend bool operator==(const EnumCursor&, const EnumCursor&) = default;
};

namespace enumeration {

/// Order of the subtree roots used for sharding and parallel work units.
inline int unit_order(int n) { return n >= 4 ? n - 2 : 1; }

struct Node {
  canon::Rows rows{};
  int order = 1;
  bool rigid = true;
  std::vector<std::uint32_t> path;
};

inline Node root() { return Node{}; }

inline Graph to_graph(const canon::Rows& rows, int n) {
  return Graph::from_rows_unchecked(n, rows.begin());
}

/// Decides whether the child (whose newest vertex is n-1) is the canonical
/// augmentation of its parent. The designated vertex class is the last cell of
/// the equitable refinement of the unit partition; ties inside that cell are
/// broken by the canonical form of the graph with the vertex individualised,
/// largest wins. On acceptance, `key` (when requested) receives that form,
/// which is an isomorphism invariant of the child.
inline bool accept_child(const canon::Rows& rows, int n, canon::Partition& refined,
                         CanonicalForm* key) {
  refined = canon::Partition::unit(n);
  canon::refine(rows, refined, 1);
  const int newest = n - 1;
  const int last = refined.last_cell();
  const canon::Mask cell = refined.cell(last);
  if (((cell >> newest) & 1U) == 0) return false;
  if (std::popcount(cell) == 1) {
    if (key != nullptr) *key = canon::from_refined(rows, n, refined);
    return true;
  }
  auto colored = [&](int v) {
    canon::Partition p = refined;
    const int s = p.individualize(v);
    canon::refine(rows, p, canon::Mask{1} << s);
    return canon::from_refined(rows, n, p);
  };
  const CanonicalForm mine = colored(newest);
  for (canon::Mask m = cell & ~(canon::Mask{1} << newest); m != 0; m &= m - 1) {
    if (colored(std::countr_zero(m)) > mine) return false;
  }
  if (key != nullptr) *key = mine;
  return true;
}

/// Depth-first walk of the canonical augmentation tree below one node.
///
/// Children of a node are tried in increasing neighbourhood-mask order. A
/// parent with a nontrivial automorphism group can produce isomorphic accepted
/// children; those are filtered by their canonical key, keeping the first.
class Walker {
 public:
  /// Leaf callback: bool(const canon::Rows&, int order, bool rigid, const path&).
  /// Rigidity is only computed when `leaf_rigidity` is set.
  using Leaf = std::function<bool(const canon::Rows&, int, bool, const std::vector<std::uint32_t>&)>;

  Walker(int target, bool leaf_rigidity, Leaf leaf)
      : target_(target), leaf_rigidity_(leaf_rigidity), leaf_(std::move(leaf)) {}

  /// Walks the subtree of `start`. `resume` continues strictly after the node
  /// it names (relative to `start`); empty means the whole subtree.
  /// Returns false when the callback asked to stop.
  bool walk(const Node& start, std::span<const std::uint32_t> resume = {}) {
    path_ = start.path;
    resume_ = resume;
    resuming_ = !resume.empty();
    base_ = start.order;
    if (start.order == target_) {
      if (resuming_) throw CursorError("cursor descends below a leaf");
      return leaf_(start.rows, start.order, start.rigid, path_);
    }
    return expand(start.rows, start.order, start.rigid);
  }

 private:
  bool expand(const canon::Rows& rows, int m, bool rigid) {
    const int depth = m - base_;
    const bool resume_here = resuming_ && depth < static_cast<int>(resume_.size());
    const std::uint32_t target_mask = resume_here ? resume_[depth] : 0;
    if (resume_here && target_mask >= (std::uint32_t{1} << m)) {
      throw CursorError("cursor mask out of range at order " + std::to_string(m + 1));
    }

    int max_deg = 0;
    for (int u = 0; u < m; ++u) max_deg = std::max(max_deg, std::popcount(rows[u]));
    canon::Mask max_mask = 0;
    for (int u = 0; u < m; ++u) {
      if (std::popcount(rows[u]) == max_deg) max_mask |= canon::Mask{1} << u;
    }

    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    canon::Partition refined;
    CanonicalForm key;
    const std::uint32_t full = std::uint32_t{1} << m;
    // A rigid parent never yields isomorphic siblings, so replay can jump ahead.
    const std::uint32_t first = (resume_here && rigid) ? target_mask : 0;
    path_.resize(static_cast<std::size_t>(m));

    for (std::uint32_t s = first; s < full; ++s) {
      const int d = std::popcount(s);
      const bool deg_ok = d >= max_deg && ((s & max_mask) == 0 || d > max_deg);
      const bool at_target = resume_here && s == target_mask;
      if (!deg_ok) {
        if (at_target) throw CursorError("cursor names a rejected augmentation");
        continue;
      }
      canon::Rows child = rows;
      for (int u = 0; u < m; ++u) {
        if ((s >> u) & 1U) child[u] |= canon::Mask{1} << m;
      }
      child[m] = s;
      if (!accept_child(child, m + 1, refined, rigid ? nullptr : &key) ||
          (!rigid && !seen.insert(key).second)) {
        if (at_target) throw CursorError("cursor names a rejected augmentation");
        continue;
      }
      if (resume_here && s < target_mask) continue;

      path_[m - 1] = s;
      if (at_target) {
        resuming_ = depth + 1 < static_cast<int>(resume_.size());
        if (!resuming_) continue;
        if (m + 1 == target_) throw CursorError("cursor descends below a leaf");
      }
      const bool child_rigid = (m + 1 < target_ || leaf_rigidity_) ? canon::rigid(child, m + 1, refined)
                                                                   : false;
      if (m + 1 == target_) {
        if (!leaf_(child, m + 1, child_rigid, path_)) return false;
      } else {
        if (!expand(child, m + 1, child_rigid)) return false;
        path_.resize(static_cast<std::size_t>(m));
      }
      resuming_ = false;
    }
    return true;
  }

  int target_;
  bool leaf_rigidity_;
  Leaf leaf_;
  std::vector<std::uint32_t> path_;
  std::span<const std::uint32_t> resume_;
  bool resuming_ = false;
  int base_ = 1;
};

/// All tree nodes of order `unit_order(n)` in visit order.
inline std::vector<Node> units(int n) {
  const int d = unit_order(n);
  std::vector<Node> out;
  if (d == 1) {
    out.push_back(root());
    return out;
  }
  Walker w(d, true, [&](const canon::Rows& rows, int order, bool rigid, const std::vector<std::uint32_t>& p) {
    out.push_back(Node{rows, order, rigid, p});
    return true;
  });
  w.walk(root());
  return out;
}

inline void check_order(int n) {
  if (n < 1 || n > kEnumMaxOrder) {
    throw BudgetError("enumeration supports orders 1.." + std::to_string(kEnumMaxOrder) + ", got " +
                      std::to_string(n));
  }
}

}  // namespace enumeration

/// Visits one graph per isomorphism class of order n, in a fixed order.
/// Returns the number of graphs visited.
inline std::uint64_t enumerate_graphs(int n, const GraphVisitor& visitor) {
  enumeration::check_order(n);
  std::uint64_t count = 0;
  enumeration::Walker w(n, false, [&](const canon::Rows& rows, int order, bool, const auto&) {
    ++count;
    return visitor(enumeration::to_graph(rows, order)) == Visit::Continue;
  });
  w.walk(enumeration::root());
  return count;
}

/// Visits the classes whose work unit index is congruent to `shard` modulo
/// `shard_count`. Shards are disjoint and together cover enumerate_graphs(n).
inline std::uint64_t enumerate_partitioned(int n, int shard, int shard_count,
                                           const GraphVisitor& visitor) {
  enumeration::check_order(n);
  if (shard_count < 1 || shard < 0 || shard >= shard_count) {
    throw InputError("invalid shard " + std::to_string(shard) + " of " + std::to_string(shard_count));
  }
  std::uint64_t count = 0;
  bool stopped = false;
  enumeration::Walker w(n, false, [&](const canon::Rows& rows, int order, bool, const auto&) {
    ++count;
    stopped = visitor(enumeration::to_graph(rows, order)) == Visit::Stop;
    return !stopped;
  });
  const auto us = enumeration::units(n);
  for (std::size_t i = static_cast<std::size_t>(shard); i < us.size() && !stopped;
       i += static_cast<std::size_t>(shard_count)) {
    w.walk(us[i]);
  }
  return count;
}

/// Sequential enumeration that can stop early and continue from a cursor.
class Enumerator {
 public:
  explicit Enumerator(int n) : n_(n) {
    enumeration::check_order(n);
    position_.order = n;
  }

  /// Runs from the current position until the visitor stops or the
  /// enumeration is exhausted. Returns the number visited in this call.
  std::uint64_t run(const GraphVisitor& visitor) {
    if (done_) return 0;
    std::uint64_t count = 0;
    enumeration::Walker w(n_, false, [&](const canon::Rows& rows, int order, bool,
                                         const std::vector<std::uint32_t>& p) {
      ++count;
      position_.path = p;
      ++position_.visited;
      return visitor(enumeration::to_graph(rows, order)) == Visit::Continue;
    });
    const bool nothing_done = position_.path.empty() && position_.visited == 0;
    if (n_ == 1 && !nothing_done) {
      done_ = true;
      return 0;
    }
    done_ = w.walk(enumeration::root(), position_.path);
    return count;
  }

  EnumCursor cursor() const { return position_; }
  bool exhausted() const noexcept { return done_; }

  /// Restores a saved position; the next run() continues after it.
  void seek(const EnumCursor& c) {
    if (c.version != kCursorVersion) {
      throw CursorError("unsupported cursor version " + std::to_string(c.version));
    }
    if (c.order != n_) throw CursorError("cursor order does not match enumeration order");
    if (c.path.size() >= static_cast<std::size_t>(std::max(n_, 1))) {
      throw CursorError("cursor path longer than the tree depth");
    }
    position_ = c;
    done_ = false;
  }

 private:
  int n_;
  EnumCursor position_;
  bool done_ = false;
};

inline EnumCursor cursor_save(const Enumerator& e) { return e.cursor(); }

/// Continues an interrupted enumeration from a cursor.
inline std::uint64_t cursor_resume(const EnumCursor& c, const GraphVisitor& visitor) {
  Enumerator e(c.order);
  e.seek(c);
  return e.run(visitor);
}

namespace enumeration {

struct ScanOptions {
  int threads = 1;
  /// Continue after this position instead of starting from scratch.
  std::optional<EnumCursor> resume;
  /// Called (serialised) whenever the fully finished prefix of units grows.
  std::function<void(const EnumCursor&)> on_prefix;
  /// Units to start in this call; the scan reports `interrupted` when the
  /// limit is hit before the last unit.
  std::size_t max_units = std::numeric_limits<std::size_t>::max();
};

struct ScanResult {
  /// Unit in which the visitor asked to stop, if any (the lowest such unit).
  std::optional<std::size_t> stopped_unit;
  /// Classes visited before and including the stop, or all of them, in visit
  /// order, counting from the resumed position's total.
  std::uint64_t visited = 0;
  bool interrupted = false;
  /// Everything up to this cursor has been visited.
  EnumCursor cursor;
};

namespace detail {

enum class UnitMode { Skip, Full, Partial };

// Position of a unit relative to a resume path, comparing mask sequences in
// visit order.
inline UnitMode unit_mode(const std::vector<std::uint32_t>& unit_path,
                          const std::vector<std::uint32_t>& resume) {
  if (resume.empty()) return UnitMode::Full;
  const std::size_t k = std::min(unit_path.size(), resume.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (unit_path[i] != resume[i]) return unit_path[i] < resume[i] ? UnitMode::Skip : UnitMode::Full;
  }
  // One is a prefix of the other.
  if (resume.size() <= unit_path.size()) return UnitMode::Skip;
  return UnitMode::Partial;
}

}  // namespace detail

/// Visits every class of order n unit by unit across worker threads.
/// `visit(unit, graph)` returns false to stop: units after the lowest stopping
/// unit are abandoned while earlier units still finish, so the outcome does not
/// depend on thread count or scheduling.
template <class Fn>
ScanResult scan_units(int n, const std::vector<Node>& us, const ScanOptions& opt, Fn&& visit) {
  check_order(n);
  const std::uint64_t base = opt.resume ? opt.resume->visited : 0;
  std::vector<std::uint32_t> resume_path;
  if (opt.resume) {
    if (opt.resume->version != kCursorVersion) {
      throw CursorError("unsupported cursor version " + std::to_string(opt.resume->version));
    }
    if (opt.resume->order != n) throw CursorError("cursor order does not match enumeration order");
    if (opt.resume->path.size() >= static_cast<std::size_t>(std::max(n, 1))) {
      throw CursorError("cursor path longer than the tree depth");
    }
    resume_path = opt.resume->path;
  }
  const bool single_done = n == 1 && opt.resume && opt.resume->visited > 0 && resume_path.empty();

  const std::size_t count = us.size();
  std::vector<std::uint64_t> counts(count, 0);
  std::vector<char> finished(count, 0);
  std::atomic<std::size_t> cutoff{parallel::kNoCutoff};
  std::atomic<std::size_t> started{0};
  std::atomic<bool> limit_hit{false};
  std::mutex prefix_mutex;
  std::size_t prefix = 0;
  std::uint64_t prefix_visited = base;
  EnumCursor prefix_cursor;
  prefix_cursor.order = n;
  if (opt.resume) prefix_cursor = *opt.resume;

  std::vector<detail::UnitMode> modes(count, detail::UnitMode::Full);
  for (std::size_t i = 0; i < count; ++i) {
    modes[i] = single_done ? detail::UnitMode::Skip : detail::unit_mode(us[i].path, resume_path);
  }
  // Units before the resume point count as finished.
  while (prefix < count && modes[prefix] == detail::UnitMode::Skip) finished[prefix++] = 1;
  const std::size_t skipped = prefix;

  auto work = [&](std::size_t i) {
    if (modes[i] == detail::UnitMode::Skip) return;
    if (started.fetch_add(1) >= opt.max_units) {
      limit_hit = true;
      return;
    }
    std::uint64_t local = 0;
    bool stop = false;
    Walker w(n, false, [&](const canon::Rows& rows, int order, bool, const std::vector<std::uint32_t>&) {
      if (cutoff.load(std::memory_order_relaxed) < i) return false;
      ++local;
      if (!visit(i, to_graph(rows, order))) {
        stop = true;
        return false;
      }
      return true;
    });
    if (modes[i] == detail::UnitMode::Partial) {
      const auto suffix = std::span<const std::uint32_t>(resume_path).subspan(us[i].path.size());
      w.walk(us[i], suffix);
    } else {
      w.walk(us[i]);
    }
    if (cutoff.load() < i) return;
    counts[i] = local;
    if (stop) {
      std::size_t cur = cutoff.load();
      while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
      }
      return;
    }
    std::lock_guard lock(prefix_mutex);
    finished[i] = 1;
    bool advanced = false;
    while (prefix < count && finished[prefix]) {
      prefix_visited += counts[prefix];
      ++prefix;
      advanced = true;
    }
    if (advanced && opt.on_prefix && prefix < count && us[prefix - 1].path.size() > 0) {
      EnumCursor c;
      c.order = n;
      c.path = us[prefix - 1].path;
      c.visited = prefix_visited;
      prefix_cursor = c;
      opt.on_prefix(c);
    }
  };
  parallel::run_indexed(count, opt.threads, cutoff, work);

  ScanResult r;
  const std::size_t stop_at = cutoff.load();
  if (stop_at != parallel::kNoCutoff) {
    r.stopped_unit = stop_at;
    r.visited = base;
    for (std::size_t i = 0; i <= stop_at; ++i) r.visited += counts[i];
    return r;
  }
  r.visited = prefix_visited;
  r.interrupted = limit_hit.load() || prefix < count;
  if (r.interrupted) {
    r.cursor = prefix_cursor;
    if (prefix > skipped && !us[prefix - 1].path.empty()) {
      r.cursor.path = us[prefix - 1].path;
      r.cursor.visited = prefix_visited;
    }
  } else {
    r.cursor.order = n;
    r.cursor.visited = prefix_visited;
    r.cursor.path.clear();
  }
  return r;
}

}  // namespace enumeration

/// Number of isomorphism classes of order n.
inline std::uint64_t count_graphs(int n) {
  return enumerate_graphs(n, [](const Graph&) { return Visit::Continue; });
}

}  // namespace strengthlab
