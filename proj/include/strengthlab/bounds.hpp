#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strengthlab/canonical.hpp"
#include "strengthlab/enumerate.hpp"
#include "strengthlab/error.hpp"
#include "strengthlab/graph.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/strength.hpp"

namespace strengthlab {

inline constexpr int kSigmaMinOrder = 3;
inline constexpr int kSigmaMaxOrder = 35;
inline constexpr int kFMaxOrder = 9;
inline constexpr int kFMaxExtendedOrder = 10;

namespace detail {

inline void require_order_at_least_3(int n) {
  if (n < 3) throw InputError("bound needs n >= 3, got " + std::to_string(n));
}

inline std::int64_t isqrt(std::int64_t m) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

}  // namespace detail

/// 3n + floor(n/2) - 3.
inline int rho(int n) {
  detail::require_order_at_least_3(n);
  return 3 * n + n / 2 - 3;
}

/// ceil((3 + sqrt(8n-7)) / 2), computed without floating point.
inline int fk_threshold(int n) {
  if (n < 1) throw InputError("order must be positive");
  const std::int64_t m = 8 * static_cast<std::int64_t>(n) - 7;
  const std::int64_t r = detail::isqrt(m);
  if (r * r == m) return static_cast<int>((3 + r + 1) / 2);
  // sqrt(m) lies strictly between r and r+1.
  return static_cast<int>((3 + r) / 2 + 1);
}

/// 4n - 2*ceil((3+sqrt(8n-7))/2) + 2.
inline int rho_prime(int n) {
  detail::require_order_at_least_3(n);
  return 4 * n - 2 * fk_threshold(n) + 2;
}

struct SigmaResult {
  int n = 0;
  int value = 0;
  /// Largest registry value r(a+1,b+1) among the minimizing pairs.
  int reason_s = 0;
  int reason_t = 0;
  int reason_value = 0;

  std::string reason() const {
    return "r(" + std::to_string(reason_s) + "," + std::to_string(reason_t) + ")=" + std::to_string(reason_value);
  }
};

/// min{a+b : r(a+1,b+1) > n} over pairs whose classical value is known.
inline SigmaResult sigma(int n) {
  if (n < kSigmaMinOrder || n > kSigmaMaxOrder) {
    throw InputError("insufficient known Ramsey data for sigma at n=" + std::to_string(n) + " (supported: " +
                     std::to_string(kSigmaMinOrder) + ".." + std::to_string(kSigmaMaxOrder) + ")");
  }
  SigmaResult best;
  best.n = n;
  // r(2, n+1) = n+1 > n, so sums up to n+1 always suffice.
  for (int sum = 2; sum <= n + 1 && best.value == 0; ++sum) {
    for (int a = 1; a < sum; ++a) {
      const int b = sum - a;
      if (a > b) break;
      const auto r = known_classical(a + 1, b + 1);
      if (!r || *r <= n) continue;
      best.value = sum;
      if (*r > best.reason_value) {
        best.reason_s = a + 1;
        best.reason_t = b + 1;
        best.reason_value = *r;
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// f(n) by enumeration

struct FMaxResult {
  int n = 0;
  int value = 0;
  /// The enumerated graph of the maximizing pair and its complement.
  Graph witness;
  Graph witness_complement;
  int witness_strength = 0;
  int complement_strength = 0;
  std::uint64_t classes = 0;
  std::uint64_t pairs_evaluated = 0;
};

struct FMaxOptions {
  int threads = 1;
  /// Permit order 10 (about twelve million classes).
  bool extended = false;
};

/// max str(G)+str(complement) over classes with both sides nonempty. Each
/// complementary pair of classes is evaluated once; the witness is the first
/// maximizing class in enumeration order.
inline FMaxResult f_max(int n, const FMaxOptions& opt = {}) {
  if (n < 3) throw InputError("f(n) needs n >= 3: smaller orders have no pair with both sides nonempty");
  const int cap = opt.extended ? kFMaxExtendedOrder : kFMaxOrder;
  if (n > cap) {
    throw BudgetError("f_max enumerates at most order " + std::to_string(cap) +
                      (opt.extended ? "" : " (order 10 needs the extended budget)"));
  }
  const int total_edges = n * (n - 1) / 2;
  struct UnitBest {
    int value = -1;
    std::optional<Graph> g;
    std::uint64_t pairs = 0;
  };
  const auto units = enumeration::units(n);
  std::vector<UnitBest> best(units.size());
  enumeration::ScanOptions so;
  so.threads = opt.threads;
  const auto scan = enumeration::scan_units(n, units, so, [&](std::size_t unit, const Graph& g) {
    const int m = g.size();
    if (m == 0 || m == total_edges || 2 * m > total_edges) return true;
    const Graph comp = complement(g);
    if (2 * m == total_edges && canonical_form(comp) < canonical_form(g)) return true;
    UnitBest& b = best[unit];
    ++b.pairs;
    const int v = strength_value(g) + strength_value(comp);
    if (v > b.value) {
      b.value = v;
      b.g = g;
    }
    return true;
  });
  FMaxResult r;
  r.n = n;
  r.classes = scan.visited;
  int top = -1;
  for (const UnitBest& b : best) {
    r.pairs_evaluated += b.pairs;
    if (b.value > top) {
      top = b.value;
      r.witness = *b.g;
    }
  }
  r.value = top;
  r.witness_complement = complement(r.witness);
  r.witness_strength = strength_value(r.witness);
  r.complement_strength = strength_value(r.witness_complement);
  return r;
}

// ---------------------------------------------------------------------------
// f(n) from Ramsey data

struct FViaRamsey {
  int n = 0;
  /// f(n) lies in [lower, upper]; equal when the minimizing sum is certain.
  int lower = 0;
  int upper = 0;
  /// Range for min{s+t : r(F_s,F_t) > n, 2 <= s <= t <= n}.
  int min_sum_lower = 0;
  int min_sum_upper = 0;
  /// Pairs certainly exceeding n at the smallest certain sum.
  std::vector<FkRamseyBounds> pairs;
  /// Pairs at smaller sums whose comparison with n is undecided.
  std::vector<FkRamseyBounds> undecided;

  bool exact() const { return lower == upper; }

  std::string reason() const {
    std::string out;
    for (const FkRamseyBounds& b : pairs) {
      if (!out.empty()) out += " and ";
      out += "r(F_" + std::to_string(b.s) + ",F_" + std::to_string(b.t) + ")";
      out += b.exact() ? "=" : " >= ";
      out += std::to_string(b.lower);
    }
    return out;
  }
};

/// f(n) = 4n - min{s+t : r(F_s,F_t) > n} + 2 with the minimum over pairs
/// satisfying n >= max{s,t}, evaluated from closed forms and bounds.
inline FViaRamsey f_via_ramsey(int n) {
  if (n < 4) throw InputError("f via Ramsey numbers needs n >= 4");
  if (n > kMaxOrder) throw InputError("order above 64");
  FViaRamsey r;
  r.n = n;
  int first_open = 0;
  for (int sum = 4; sum <= 2 * n && r.pairs.empty(); ++sum) {
    std::vector<FkRamseyBounds> open;
    for (int s = 2; 2 * s <= sum; ++s) {
      const int t = sum - s;
      if (t > n) continue;
      const FkRamseyBounds b = fk_ramsey_bounds(s, t);
      if (b.lower > n) {
        r.pairs.push_back(b);
      } else if (!b.upper || *b.upper > n) {
        open.push_back(b);
      }
    }
    if ((!open.empty() || !r.pairs.empty()) && first_open == 0) first_open = sum;
    if (r.pairs.empty()) r.undecided.insert(r.undecided.end(), open.begin(), open.end());
    if (!r.pairs.empty()) {
      r.min_sum_upper = sum;
      // Undecided pairs at the same sum do not change the minimum.
      r.undecided.erase(std::remove_if(r.undecided.begin(), r.undecided.end(),
                                       [&](const FkRamseyBounds& b) { return b.s + b.t >= sum; }),
                        r.undecided.end());
    }
  }
  if (r.pairs.empty()) throw InputError("insufficient Ramsey data to bound f(" + std::to_string(n) + ")");
  r.min_sum_lower = first_open;
  r.lower = 4 * n - r.min_sum_upper + 2;
  r.upper = 4 * n - r.min_sum_lower + 2;
  return r;
}

// ---------------------------------------------------------------------------
// Table rows

struct BoundsRow {
  int n = 0;
  int rho = 0;
  int rho_prime = 0;
  int sigma = 0;
  std::string sigma_reason;
  int upper = 0;  // 4n - sigma
  std::optional<int> f_exact;
  std::string f_source;  // "enumeration" or "ramsey"
  std::optional<std::pair<Graph, Graph>> f_witness;
};

struct BoundsTableOptions {
  /// Orders up to this get f(n) by enumeration.
  int enumerate_through = 5;
  int threads = 1;
};

inline std::vector<BoundsRow> bounds_table(int n_from, int n_to, const BoundsTableOptions& opt = {}) {
  if (n_from < kSigmaMinOrder || n_to > kSigmaMaxOrder || n_from > n_to) {
    throw InputError("bounds table covers n in [" + std::to_string(kSigmaMinOrder) + "," +
                     std::to_string(kSigmaMaxOrder) + "]");
  }
  std::vector<BoundsRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    BoundsRow row;
    row.n = n;
    row.rho = rho(n);
    row.rho_prime = rho_prime(n);
    const SigmaResult s = sigma(n);
    row.sigma = s.value;
    row.sigma_reason = s.reason();
    row.upper = 4 * n - s.value;
    if (n <= std::min(opt.enumerate_through, kFMaxOrder)) {
      FMaxOptions fo;
      fo.threads = opt.threads;
      const FMaxResult f = f_max(n, fo);
      row.f_exact = f.value;
      row.f_source = "enumeration";
      row.f_witness = std::make_pair(f.witness, f.witness_complement);
    } else if (n >= 4) {
      const FViaRamsey f = f_via_ramsey(n);
      if (f.exact()) {
        row.f_exact = f.lower;
        row.f_source = "ramsey";
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace strengthlab
