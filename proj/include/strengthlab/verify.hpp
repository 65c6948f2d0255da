#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "strengthlab/bounds.hpp"
#include "strengthlab/canonical.hpp"
#include "strengthlab/enumerate.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/serialize.hpp"
#include "strengthlab/strength.hpp"
#include "strengthlab/subgraph.hpp"
#include "strengthlab/tables.hpp"

namespace strengthlab::verify {

struct Check {
  std::string name;
  bool passed = true;
  Json detail = Json::object();
};

struct Report {
  std::string suite;
  int max_order = 0;
  std::vector<Check> checks;

  bool passed() const {
    for (const Check& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const Check& c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"suite", suite}, {"max_order", max_order}, {"passed", passed()}, {"checks", arr}};
  }
};

/// Largest order for the labelled-graph dedup oracle (2^21 graphs at 7).
inline constexpr int kDedupOracleMaxOrder = 7;

inline std::unordered_set<CanonicalForm, CanonicalFormHash> dedup_oracle(int n) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::array<Row, kMaxOrder> rows{};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) {
        rows[slots[i].first] |= Row{1} << slots[i].second;
        rows[slots[i].second] |= Row{1} << slots[i].first;
      }
    }
    seen.insert(canonical_form(Graph::from_rows_unchecked(n, rows.begin())));
  }
  return seen;
}

inline void enumeration_suite(int max_order, Report& rep) {
  for (int n = 1; n <= std::min(max_order, kEnumMaxOrder); ++n) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> forms;
    std::uint64_t duplicates = 0;
    const std::uint64_t count = enumerate_graphs(n, [&](const Graph& g) {
      if (!forms.insert(canonical_form(g)).second) ++duplicates;
      return Visit::Continue;
    });
    Check c{"enumeration order " + std::to_string(n)};
    c.detail["classes"] = count;
    c.passed = duplicates == 0;
    if (n <= kDedupOracleMaxOrder) {
      const auto oracle = dedup_oracle(n);
      c.detail["oracle_classes"] = oracle.size();
      c.passed = c.passed && oracle == forms;
    }
    std::uint64_t not_closed = 0;
    for (const CanonicalForm& f : forms) {
      if (!forms.contains(canonical_form(complement(f.graph())))) ++not_closed;
    }
    c.detail["complement_closed"] = not_closed == 0;
    c.passed = c.passed && not_closed == 0;
    rep.checks.push_back(std::move(c));
  }
}

inline void strength_suite(int max_order, Report& rep) {
  for (int n = 2; n <= std::min(max_order, kBruteForceMaxOrder); ++n) {
    std::uint64_t classes = 0;
    std::uint64_t nonempty = 0;
    std::uint64_t mismatches = 0;
    enumerate_graphs(n, [&](const Graph& g) {
      ++classes;
      if (g.empty_edges()) {
        bool both_reject = true;
        try {
          (void)strength(g);
          both_reject = false;
        } catch (const EmptyGraphError&) {
        }
        try {
          (void)strength_bruteforce(g);
          both_reject = false;
        } catch (const EmptyGraphError&) {
        }
        if (!both_reject) ++mismatches;
        return Visit::Continue;
      }
      ++nonempty;
      const StrengthResult a = strength(g);
      const StrengthResult b = strength_bruteforce(g);
      if (a.value != b.value || a.witness.strength_value() != a.value) ++mismatches;
      return Visit::Continue;
    });
    Check c{"strength oracle order " + std::to_string(n)};
    c.detail = Json{{"classes", classes}, {"nonempty", nonempty}, {"mismatches", mismatches}};
    c.passed = mismatches == 0;
    rep.checks.push_back(std::move(c));
  }
}

inline void theorem_suite(int max_order, Report& rep) {
  std::uint64_t graphs = 0;
  std::uint64_t v41 = 0;
  std::uint64_t v12 = 0;
  std::uint64_t v45 = 0;
  std::uint64_t v11 = 0;
  for (int n = 2; n <= std::min(max_order, 7); ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (g.empty_edges()) return Visit::Continue;
      ++graphs;
      const int str = strength_bruteforce(g).value;
      const Graph comp = complement(g);
      for (int k = 1; k <= n; ++k) {
        if ((str <= 2 * n - k) != is_subgraph(comp, build_fk(k))) ++v41;
      }
      if (min_degree(g) >= 1) {
        if (str < strength_lower_bound(g)) ++v12;
        for (int m = 1; m <= 3; ++m) {
          if (!strength_isolated_invariance_check(g, m)) ++v11;
        }
      }
      if (str > strength_upper_bound_beta(g)) ++v45;
      return Visit::Continue;
    });
  }
  auto add = [&](std::string name, std::uint64_t violations) {
    Check c{std::move(name)};
    c.detail = Json{{"graphs", graphs}, {"violations", violations}};
    c.passed = violations == 0;
    rep.checks.push_back(std::move(c));
  };
  add("str <= 2n-k iff F_k in complement", v41);
  add("str >= n + min degree", v12);
  add("str <= 2n - independence number", v45);
  add("isolated vertices leave str unchanged (m <= 3)", v11);

  {
    Check c{"Chvatal-type lower bound vs exhaustive r(F_s,F_t)"};
    Json rows = Json::array();
    const int cap = std::min(std::max(max_order, 2), 8);
    for (int s = 2; s <= 5; ++s) {
      for (int t = s; t <= 8; ++t) {
        const RamseyResult r = ramsey_fk(s, t, cap);
        if (r.status != RamseyStatus::Exact) continue;
        const bool ok = chvatal_fk_lower(s, t) <= r.value &&
                        (!known_classical(s, t) || r.value <= *known_classical(s, t));
        rows.push_back(Json{{"s", s}, {"t", t}, {"value", r.value}, {"lower", chvatal_fk_lower(s, t)}});
        c.passed = c.passed && ok;
      }
    }
    c.detail["pairs"] = rows;
    rep.checks.push_back(std::move(c));
  }
  {
    Check c{"r(P_3,F_t) matches the F_3 closed form for t <= 8"};
    for (int t = 2; t <= 8; ++t) c.passed = c.passed && ramsey_p3(build_fk(t)) == r_f3_formula(t);
    rep.checks.push_back(std::move(c));
  }
  {
    Check c{"threshold s=ceil((3+sqrt(8n-7))/2) satisfies 1+(s-1)floor(s/2) > n >= s"};
    for (int n = 4; n <= kSigmaMaxOrder; ++n) {
      const int s = fk_threshold(n);
      c.passed = c.passed && 1 + (s - 1) * (s / 2) > n && s <= n;
    }
    rep.checks.push_back(std::move(c));
  }
}

namespace detail {

inline bool table_matches(const Table& t, std::size_t col, const std::vector<int>& expected, Json& detail) {
  std::vector<int> got;
  for (const auto& row : t.rows) got.push_back(row[col].is_number() ? row[col].get<int>() : -1);
  detail["values"] = got;
  return got == expected;
}

}  // namespace detail

inline void table_suite(int max_order, Report& rep) {
  {
    Check c{"table 1 closed forms"};
    c.passed = detail::table_matches(table1(), 2, {2, 3, 4, 3, 5, 5, 7, 9, 11, 13}, c.detail);
    rep.checks.push_back(std::move(c));
  }
  {
    Check c{"table 2 via Ramsey data"};
    c.passed = detail::table_matches(table2(), 1, {7, 11, 14, 18, 21, 25, 28, 32, 35, 39}, c.detail);
    rep.checks.push_back(std::move(c));
  }
  {
    Check c{"table 2 by enumeration"};
    const std::vector<int> expected = {7, 11, 14, 18, 21, 25, 28};
    Json got = Json::array();
    for (int n = 3; n <= std::min(max_order, kFMaxOrder); ++n) {
      const int f = f_max(n).value;
      got.push_back(f);
      c.passed = c.passed && f == expected[static_cast<std::size_t>(n - 3)];
    }
    c.detail["values"] = got;
    rep.checks.push_back(std::move(c));
  }
  {
    Check c{"table 3 sigma ranges"};
    const Table t = table3();
    const std::vector<std::vector<std::string>> expected = {
        {"[3,5]", "4", "r(3,3)=6"},    {"[6,8]", "5", "r(3,4)=9"},    {"[9,17]", "6", "r(4,4)=18"},
        {"[18,24]", "7", "r(4,5)=25"}, {"[25,27]", "9", "r(3,8)=28"}, {"[28,35]", "10", "r(3,9)=36"}};
    std::vector<std::vector<std::string>> got;
    for (const auto& row : t.rows) {
      got.push_back({row[0].get<std::string>(), std::to_string(row[1].get<int>()), row[2].get<std::string>()});
    }
    c.passed = got == expected;
    c.detail["rows"] = got.size();
    rep.checks.push_back(std::move(c));
  }
  {
    Check c{"table 4 rows"};
    // Columns rho_n, rho'_n, 4n - sigma_n for n = 3..35.
    const int expected[33][3] = {
        {7, 6, 8},       {11, 10, 12},    {14, 12, 16},    {18, 16, 19},    {21, 20, 23},    {25, 22, 27},
        {28, 26, 30},    {32, 30, 34},    {35, 34, 38},    {39, 36, 42},    {42, 40, 46},    {46, 44, 50},
        {49, 48, 54},    {53, 52, 58},    {56, 54, 62},    {60, 58, 65},    {63, 62, 69},    {67, 66, 73},
        {70, 70, 77},    {74, 74, 81},    {77, 76, 85},    {81, 80, 89},    {84, 84, 91},    {88, 88, 95},
        {91, 92, 99},    {95, 96, 102},   {98, 100, 106},  {102, 102, 110}, {105, 106, 114}, {109, 110, 118},
        {112, 114, 122}, {116, 118, 126}, {119, 122, 130}};
    const Table t = table4();
    int mismatched = 0;
    for (std::size_t i = 0; i < t.rows.size() && i < 33; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (t.rows[i][static_cast<std::size_t>(j + 1)].get<int>() != expected[i][j]) ++mismatched;
      }
    }
    c.passed = t.rows.size() == 33 && mismatched == 0;
    c.detail["mismatched_cells"] = mismatched;
    rep.checks.push_back(std::move(c));
  }
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "enumeration", "strength", "theorems", "tables"};
  return names;
}

inline Report run_suite(const std::string& suite, int max_order) {
  if (max_order < 1) throw InputError("max order must be positive");
  if (max_order > kBruteForceMaxOrder) {
    throw BudgetError("verification is limited to order " + std::to_string(kBruteForceMaxOrder));
  }
  Report rep;
  rep.suite = suite;
  rep.max_order = max_order;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "enumeration") {
    known = true;
    enumeration_suite(max_order, rep);
  }
  if (all || suite == "strength") {
    known = true;
    strength_suite(max_order, rep);
  }
  if (all || suite == "theorems") {
    known = true;
    theorem_suite(max_order, rep);
  }
  if (all || suite == "tables") {
    known = true;
    table_suite(max_order, rep);
  }
  if (!known) throw InputError("unknown suite '" + suite + "'");
  return rep;
}

}  // namespace strengthlab::verify
