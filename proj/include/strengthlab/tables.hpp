#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "strengthlab/bounds.hpp"
#include "strengthlab/error.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/serialize.hpp"

namespace strengthlab {

enum class TableFormat { Csv, Json, Markdown };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  if (s == "md" || s == "markdown") return TableFormat::Markdown;
  throw InputError("unknown table format '" + s + "' (csv, json, md)");
}

/// Cells are JSON scalars: integers or strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

/// r(F_s,F_t) for the ten small pairs with s <= 4.
inline Table table1() {
  Table t{{"G1", "G2", "r(G1,G2)"}, {}};
  const std::pair<int, int> pairs[] = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4},
                                       {3, 5}, {4, 4}, {4, 5}, {4, 6}, {4, 7}};
  for (const auto& [s, u] : pairs) {
    const FkRamseyBounds b = fk_ramsey_bounds(s, u);
    t.rows.push_back({"F_" + std::to_string(s), "F_" + std::to_string(u), b.lower});
  }
  return t;
}

/// f(n) for n in [3,12]: order 3 by enumeration, the rest from Ramsey data.
inline Table table2() {
  Table t{{"n", "f(n)", "reason"}, {}};
  {
    const FMaxResult f = f_max(3);
    Graph g = f.witness;
    Graph h = f.witness_complement;
    if (g.size() < h.size()) std::swap(g, h);
    const std::string reason = "G=" + identify_family(g).value_or(graph6_encode(g)) +
                               " and complement=" + identify_family(h).value_or(graph6_encode(h));
    t.rows.push_back({3, f.value, reason});
  }
  for (int n = 4; n <= 12; ++n) {
    const FViaRamsey f = f_via_ramsey(n);
    if (f.exact()) {
      t.rows.push_back({n, f.lower, f.reason()});
    } else {
      t.rows.push_back({n, "[" + std::to_string(f.lower) + "," + std::to_string(f.upper) + "]", f.reason()});
    }
  }
  return t;
}

/// sigma_n over [3,35], grouped into maximal runs sharing value and reason.
inline Table table3() {
  Table t{{"n", "sigma_n", "reason"}, {}};
  int start = kSigmaMinOrder;
  SigmaResult cur = sigma(start);
  for (int n = kSigmaMinOrder + 1; n <= kSigmaMaxOrder + 1; ++n) {
    const bool end = n > kSigmaMaxOrder;
    SigmaResult next = end ? SigmaResult{} : sigma(n);
    if (end || next.value != cur.value || next.reason() != cur.reason()) {
      t.rows.push_back({"[" + std::to_string(start) + "," + std::to_string(n - 1) + "]", cur.value, cur.reason()});
      start = n;
      cur = next;
    }
  }
  return t;
}

/// rho_n, rho'_n and 4n - sigma_n for n in [3,35].
inline Table table4() {
  Table t{{"n", "rho_n", "rho'_n", "4n-sigma_n"}, {}};
  for (const BoundsRow& r : bounds_table(kSigmaMinOrder, kSigmaMaxOrder, BoundsTableOptions{0, 1})) {
    t.rows.push_back({r.n, r.rho, r.rho_prime, r.upper});
  }
  return t;
}

inline Table paper_table(int which) {
  switch (which) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return table4();
    default: throw InputError("unknown table " + std::to_string(which) + " (expected 1-4)");
  }
}

namespace detail {

inline std::string cell_text(const Json& c) { return c.is_string() ? c.get<std::string>() : c.dump(); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render_table(const Table& t, TableFormat fmt) {
  std::string out;
  if (fmt == TableFormat::Json) {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }
  if (fmt == TableFormat::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += detail::csv_field(cells[i]);
      }
      out += '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      for (const Json& c : row) cells.push_back(detail::cell_text(c));
      line(cells);
    }
    return out;
  }
  // Markdown: numeric columns right-aligned, text left-aligned.
  const std::size_t k = t.columns.size();
  std::vector<std::size_t> width(k, 3);
  std::vector<bool> numeric(k, true);
  for (std::size_t i = 0; i < k; ++i) width[i] = std::max(width[i], t.columns[i].size());
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < k; ++i) {
      width[i] = std::max(width[i], detail::cell_text(row[i]).size());
      if (!row[i].is_number()) numeric[i] = false;
    }
  }
  auto pad = [&](const std::string& s, std::size_t i) {
    const std::string fill(width[i] - s.size(), ' ');
    return numeric[i] ? fill + s : s + fill;
  };
  out += '|';
  for (std::size_t i = 0; i < k; ++i) out += ' ' + pad(t.columns[i], i) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < k; ++i) {
    out += numeric[i] ? ' ' + std::string(width[i] - 1, '-') + ": |" : " :" + std::string(width[i] - 1, '-') + " |";
  }
  out += '\n';
  for (const auto& row : t.rows) {
    out += '|';
    for (std::size_t i = 0; i < k; ++i) out += ' ' + pad(detail::cell_text(row[i]), i) + " |";
    out += '\n';
  }
  return out;
}

}  // namespace strengthlab
