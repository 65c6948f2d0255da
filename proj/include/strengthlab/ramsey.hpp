#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strengthlab/canonical.hpp"
#include "strengthlab/enumerate.hpp"
#include "strengthlab/error.hpp"
#include "strengthlab/graph.hpp"
#include "strengthlab/graph_io.hpp"
#include "strengthlab/strength.hpp"
#include "strengthlab/subgraph.hpp"

namespace strengthlab {

/// Largest order arrows_fk and ramsey_fk will enumerate.
inline constexpr int kRamseyMaxOrder = 10;

// ---------------------------------------------------------------------------
// Closed forms

/// 1+(s-1)*floor(t/2).
inline int chvatal_fk_lower(int s, int t) {
  if (s < 2 || t < 2) throw InputError("family indices must be at least 2");
  if (s > t) throw InputError("chvatal_fk_lower expects s <= t");
  return 1 + (s - 1) * (t / 2);
}

/// r(T_s, K_t) = 1+(s-1)(t-1) for any tree T_s of order s.
inline int chvatal_tree_formula(int s, int t) {
  if (s < 2 || t < 2) throw InputError("tree order and clique order must be at least 2");
  return 1 + (s - 1) * (t - 1);
}

/// r(P_3, G) from the matching structure of the complement.
inline int ramsey_p3(const Graph& g) {
  if (g.order() < 2) throw InputError("ramsey_p3 needs order at least 2");
  if (min_degree(g) < 1) throw InputError("ramsey_p3 needs a graph without isolated vertices");
  const Graph comp = complement(g);
  if (has_one_factor(comp)) return g.order();
  return 2 * g.order() - 2 * matching_number(comp) - 1;
}

inline int r_f3_formula(int t) {
  if (t < 2) throw InputError("r(F_3,F_t) formula needs t >= 2");
  return t % 2 == 0 ? t + 1 : t;
}

inline int r_f4_formula(int t) {
  if (t < 3) throw InputError("r(F_4,F_t) formula needs t >= 3");
  return 2 * t - 1;
}

// ---------------------------------------------------------------------------
// Classical Ramsey numbers

/// Exact classical values r(s,t): the trivial rows r(1,t)=1 and r(2,t)=t plus
/// a fixed table of nontrivial values.
class KnownRamseyRegistry {
 public:
  static const KnownRamseyRegistry& standard() {
    static const KnownRamseyRegistry reg;
    return reg;
  }

  std::optional<int> lookup(int s, int t) const {
    if (s < 1 || t < 1) return std::nullopt;
    if (s > t) std::swap(s, t);
    if (s == 1) return 1;
    if (s == 2) return t;
    const auto it = table_.find({s, t});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// The nontrivial entries, keyed by (s,t) with s <= t.
  const std::map<std::pair<int, int>, int>& entries() const noexcept { return table_; }

 private:
  KnownRamseyRegistry()
      : table_{{{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
               {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}} {}

  std::map<std::pair<int, int>, int> table_;
};

inline std::optional<int> known_classical(int s, int t) {
  return KnownRamseyRegistry::standard().lookup(s, t);
}

/// What is known about r(F_s,F_t) without enumeration.
struct FkRamseyBounds {
  int s = 0;
  int t = 0;
  int lower = 0;
  std::optional<int> upper;  // absent: no finite bound available here
  /// Set when the value follows from a closed form or a cited exact value.
  std::optional<std::string> closed_form;

  bool exact() const { return upper && *upper == lower; }
};

inline FkRamseyBounds fk_ramsey_bounds(int s, int t) {
  if (s < 1 || t < 1) throw InputError("family indices must be positive");
  if (s > t) std::swap(s, t);
  FkRamseyBounds b;
  b.s = s;
  b.t = t;
  auto exact = [&](int v, std::string why) {
    b.lower = v;
    b.upper = v;
    b.closed_form = std::move(why);
    return b;
  };
  if (s == 1) return exact(1, "r(F_1,F_t)=1");
  if (s == 2) return exact(t, "r(F_2,F_t)=t");
  if (s == 3) return exact(r_f3_formula(t), t % 2 == 0 ? "r(F_3,F_t)=t+1 (t even)" : "r(F_3,F_t)=t (t odd)");
  if (s == 4) return exact(r_f4_formula(t), "r(F_4,F_t)=2t-1");
  if (s == 5 && t == 5) return exact(10, "r(F_5,F_5)=10");
  b.lower = std::max({t, chvatal_fk_lower(s, t), 2 * t - 1});
  b.upper = known_classical(s, t);
  return b;
}

// ---------------------------------------------------------------------------
// Family identification

/// Name of a standard family isomorphic to g ("K_4", "2K_3", "K_{3,3}",
/// "K_1 U K_2", "F_5"), or nullopt.
inline std::optional<std::string> identify_family(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (n > kCanonMaxOrder) return std::nullopt;
  const int m = g.size();
  auto same = [&](const Graph& h) { return h.size() == m && isomorphic(g, h); };
  if (m == n * (n - 1) / 2) return "K_" + std::to_string(n);
  for (int b = 1; b < n; ++b) {
    if (n % b != 0 || m != (n / b) * b * (b - 1) / 2) continue;
    if (same(copies(n / b, complete(b)))) return std::to_string(n / b) + "K_" + std::to_string(b);
  }
  for (int a = 1; a <= n / 2; ++a) {
    if (m == a * (n - a) && same(complete_bipartite(a, n - a))) {
      return "K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}";
    }
  }
  for (int a = 1; 2 * a < n; ++a) {
    const int b = n - a;
    if (m == a * (a - 1) / 2 + b * (b - 1) / 2 && same(disjoint_union(complete(a), complete(b)))) {
      return "K_" + std::to_string(a) + " U K_" + std::to_string(b);
    }
  }
  if (same(build_fk(n))) return "F_" + std::to_string(n);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Arrowing

namespace detail {

/// Per-graph arrowing test for (F_s, F_t): F_s in G or F_t in the complement.
/// The smaller index is tried first.
class ArrowTest {
 public:
  ArrowTest(int s, int t) : s_(s), t_(t) {}

  bool operator()(const Graph& g) const {
    const SubgraphMatcher& ms = fk_matcher(s_);
    const SubgraphMatcher& mt = fk_matcher(t_);
    if (s_ <= t_) {
      if (ms.contained_in(g)) return true;
      return mt.contained_in(complement(g));
    }
    if (mt.contained_in(complement(g))) return true;
    return ms.contained_in(g);
  }

 private:
  int s_;
  int t_;
};

inline void check_family_indices(int s, int t) {
  if (s < 2 || t < 2) throw InputError("family indices must be at least 2");
  if (s > kMaxOrder || t > kMaxOrder) throw InputError("family indices above 64 are not supported");
}

}  // namespace detail

/// Execution settings for enumeration-backed searches.
struct SearchControl {
  int threads = 1;
  /// Work units to start before reporting an interruption (testing and
  /// time-sliced runs).
  std::size_t max_units = std::numeric_limits<std::size_t>::max();
};

struct ArrowsResult {
  int n = 0;
  int s = 0;
  int t = 0;
  bool arrows = false;
  /// First counterexample in enumeration order when `arrows` is false.
  std::optional<Graph> witness;
  std::uint64_t classes_examined = 0;
  /// Set when the unit limit stopped the scan; `cursor` then marks progress.
  bool interrupted = false;
  EnumCursor cursor;
};

/// Whether every graph of order n contains F_s or has F_t in its complement.
inline ArrowsResult arrows_fk(int n, int s, int t, const SearchControl& control = {},
                              const std::optional<EnumCursor>& resume = std::nullopt,
                              const std::function<void(const EnumCursor&)>& on_checkpoint = {}) {
  detail::check_family_indices(s, t);
  if (n < 1) throw InputError("order must be positive");
  if (n > kRamseyMaxOrder) {
    throw BudgetError("arrowing checks enumerate at most order " + std::to_string(kRamseyMaxOrder));
  }
  ArrowsResult r;
  r.n = n;
  r.s = s;
  r.t = t;
  const detail::ArrowTest test(s, t);
  const auto units = enumeration::units(n);
  std::vector<std::optional<Graph>> found(units.size());
  enumeration::ScanOptions opt;
  opt.threads = control.threads;
  opt.resume = resume;
  opt.on_prefix = on_checkpoint;
  opt.max_units = control.max_units;
  const auto scan = enumeration::scan_units(n, units, opt, [&](std::size_t unit, const Graph& g) {
    if (test(g)) return true;
    found[unit] = g;
    return false;
  });
  r.classes_examined = scan.visited;
  if (scan.stopped_unit) {
    r.arrows = false;
    r.witness = found[*scan.stopped_unit];
    return r;
  }
  r.interrupted = scan.interrupted;
  r.cursor = scan.cursor;
  r.arrows = !scan.interrupted;
  return r;
}

// ---------------------------------------------------------------------------
// r(F_s, F_t)

enum class RamseyStatus { Exact, Bounded };

inline const char* to_string(RamseyStatus s) { return s == RamseyStatus::Exact ? "exact" : "bounded"; }

struct RamseyResult {
  int s = 0;
  int t = 0;
  RamseyStatus status = RamseyStatus::Bounded;
  int value = 0;  // exact only
  int lower = 0;
  std::optional<int> upper;  // absent: unbounded as far as this search knows
  /// Order value-1 (or lower-1): contains no F_s, complement contains no F_t.
  std::optional<Graph> witness;
  std::string witness_source;  // "construction <name>" or "enumeration"
  std::uint64_t classes_examined = 0;
  /// Closed form or cited value for the pair, if any.
  std::optional<std::string> closed_form;
  /// Orders checked by enumeration with their outcome.
  std::vector<std::pair<int, bool>> checks;
  bool interrupted = false;
};

/// State of an unfinished ramsey_fk run.
struct RamseyCheckpoint {
  int s = 0;
  int t = 0;
  int n_cap = 0;
  int current_n = 0;
  EnumCursor cursor;
  std::uint64_t classes_before = 0;
  std::vector<std::pair<int, bool>> checks;
  std::optional<Graph> last_witness;
};

namespace detail {

struct Construction {
  std::string name;
  Graph graph;
};

inline bool avoids(const Graph& g, int s, int t) {
  return !fk_matcher(s).contained_in(g) && !fk_matcher(t).contained_in(complement(g));
}

/// Best verified lower-bound construction for s <= t: a graph of order L-1
/// with no F_s whose complement has no F_t, proving r >= L.
inline Construction best_construction(int s, int t) {
  std::vector<Construction> cands;
  cands.push_back({"K_{" + std::to_string(t - 1) + "," + std::to_string(t - 1) + "}",
                   complete_bipartite(t - 1, t - 1)});
  cands.push_back({std::to_string(t / 2) + "K_" + std::to_string(s - 1), copies(t / 2, complete(s - 1))});
  cands.push_back({std::to_string(t - 1) + "K_1", Graph(t - 1)});
  std::optional<Construction> best;
  for (auto& c : cands) {
    if (c.graph.order() > kMaxOrder) continue;
    if (!avoids(c.graph, s, t)) continue;
    if (auto name = identify_family(c.graph)) c.name = *name;
    if (!best || c.graph.order() > best->graph.order()) best = std::move(c);
  }
  if (!best) throw std::logic_error("no lower-bound construction verified");
  return *best;
}

}  // namespace detail

/// Smallest n <= n_cap that arrows (F_s, F_t), searched upward from the best
/// verified lower bound. Reports a bounded status when the cap is reached.
inline RamseyResult ramsey_fk(int s, int t, int n_cap = kRamseyMaxOrder, const SearchControl& control = {},
                              const std::optional<RamseyCheckpoint>& resume = std::nullopt,
                              const std::function<void(const RamseyCheckpoint&)>& on_checkpoint = {}) {
  detail::check_family_indices(s, t);
  if (n_cap > kRamseyMaxOrder) {
    throw BudgetError("ramsey search cap must be at most " + std::to_string(kRamseyMaxOrder));
  }
  if (n_cap < 1) throw InputError("ramsey search cap must be positive");
  if (s > t) {
    if (resume) throw InputError("checkpoints are stored with s <= t");
    RamseyResult r = ramsey_fk(t, s, n_cap, control, std::nullopt, on_checkpoint);
    std::swap(r.s, r.t);
    if (r.witness) r.witness = complement(*r.witness);
    return r;
  }
  if (resume && (resume->s != s || resume->t != t || resume->n_cap != n_cap)) {
    throw CursorError("checkpoint belongs to a different search");
  }

  const FkRamseyBounds known = fk_ramsey_bounds(s, t);
  const detail::Construction cons = detail::best_construction(s, t);
  const int start = cons.graph.order() + 1;

  RamseyResult r;
  r.s = s;
  r.t = t;
  r.closed_form = known.closed_form;
  r.lower = start;
  r.witness = cons.graph;
  r.witness_source = "construction " + cons.name;

  int n = start;
  std::optional<EnumCursor> cursor;
  if (resume) {
    n = resume->current_n;
    r.classes_examined = resume->classes_before;
    r.checks = resume->checks;
    if (resume->last_witness) {
      r.witness = resume->last_witness;
      r.witness_source = "enumeration";
      r.lower = resume->last_witness->order() + 1;
    }
    cursor = resume->cursor;
  }

  for (; n <= n_cap; ++n) {
    auto save = [&](const EnumCursor& c) {
      if (!on_checkpoint) return;
      RamseyCheckpoint cp{s, t, n_cap, n, c, r.classes_examined, r.checks, std::nullopt};
      if (r.witness_source == "enumeration") cp.last_witness = r.witness;
      on_checkpoint(cp);
    };
    const ArrowsResult a = arrows_fk(n, s, t, control, cursor, save);
    cursor.reset();
    if (a.interrupted) {
      r.interrupted = true;
      r.classes_examined += a.classes_examined;
      RamseyCheckpoint cp{s, t, n_cap, n, a.cursor, r.classes_examined - a.classes_examined, r.checks,
                          std::nullopt};
      if (r.witness_source == "enumeration") cp.last_witness = r.witness;
      if (on_checkpoint) on_checkpoint(cp);
      r.status = RamseyStatus::Bounded;
      r.upper = known_classical(s, t);
      return r;
    }
    r.classes_examined += a.classes_examined;
    r.checks.emplace_back(n, a.arrows);
    if (a.arrows) {
      r.status = RamseyStatus::Exact;
      r.value = n;
      r.lower = n;
      r.upper = n;
      return r;
    }
    r.witness = a.witness;
    r.witness_source = "enumeration";
    r.lower = n + 1;
  }
  r.status = RamseyStatus::Bounded;
  r.upper = known_classical(s, t);
  if (r.upper && *r.upper < r.lower) throw std::logic_error("lower bound exceeds the classical upper bound");
  return r;
}

}  // namespace strengthlab
