#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strengthlab/bounds.hpp"
#include "strengthlab/enumerate.hpp"
#include "strengthlab/error.hpp"
#include "strengthlab/graph_io.hpp"
#include "strengthlab/parallel.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/serialize.hpp"
#include "strengthlab/strength.hpp"
#include "strengthlab/tables.hpp"
#include "strengthlab/verify.hpp"

namespace strengthlab::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kBudgetError = 3,
  kVerificationFailure = 4,
  kEmptyGraph = 5,
};

/// Worker count from STRENGTHLAB_THREADS, else the hardware.
inline int default_threads() {
  if (const char* env = std::getenv("STRENGTHLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
    throw InputError(std::string("STRENGTHLAB_THREADS must be a positive integer, got '") + env + "'");
  }
  return parallel::hardware_threads();
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline Graph read_graph(const std::string& edges, const std::string& g6) {
  if (!edges.empty() && !g6.empty()) throw InputError("give either --edges or --graph6, not both");
  if (!edges.empty()) return parse_edge_list(edges);
  if (!g6.empty()) return graph6_decode(g6);
  throw InputError("a graph is required (--edges or --graph6)");
}

inline Json bounds_json(const Graph& g) {
  Json j = Json::object();
  j["lower_min_degree"] = min_degree(g) >= 1 ? Json(strength_lower_bound(g)) : Json(nullptr);
  j["upper_independence"] = strength_upper_bound_beta(g);
  return j;
}

struct StrengthArgs {
  std::string edges;
  std::string graph6;
  std::string method = "fk";
  bool allow_empty = false;
};

inline int cmd_strength(const StrengthArgs& a, std::ostream& out) {
  const Graph g = read_graph(a.edges, a.graph6);
  if (a.method != "fk" && a.method != "brute" && a.method != "both") {
    throw InputError("unknown method '" + a.method + "' (fk, brute, both)");
  }
  Json j;
  j["graph6"] = graph6_encode(g);
  j["order"] = g.order();
  j["size"] = g.size();
  if (g.empty_edges()) {
    if (!a.allow_empty) throw EmptyGraphError();
    j["strength"] = nullptr;
    j["note"] = "strength is undefined for graphs without edges";
    if (g.order() > 1) {
      j["complement_strength"] = strength_value(complement(g));
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::optional<StrengthResult> fk;
  std::optional<StrengthResult> brute;
  if (a.method != "brute") fk = strength(g);
  if (a.method != "fk") brute = strength_bruteforce(g);
  const StrengthResult& primary = fk ? *fk : *brute;
  j["strength"] = primary.value;
  j["method"] = a.method == "both" ? "both" : to_string(primary.method);
  j["witness"] = primary.witness.labels();
  j["max_fk_in_complement"] = max_fk_subgraph(complement(g));
  if (fk && brute) {
    j["fk_characterization"] = fk->value;
    j["brute_force"] = brute->value;
    j["agree"] = fk->value == brute->value;
  }
  const Graph comp = complement(g);
  j["complement_strength"] = comp.empty_edges() ? Json(nullptr) : Json(strength_value(comp));
  j["bounds"] = bounds_json(g);
  out << j.dump(2) << '\n';
  if (fk && brute && fk->value != brute->value) return kVerificationFailure;
  return kOk;
}

struct RamseyArgs {
  int s = 0;
  int t = 0;
  int max_n = kRamseyMaxOrder;
  int threads = 0;
  std::string checkpoint;
  bool timing = false;
  std::size_t max_units = 0;
};

inline int cmd_ramsey(const RamseyArgs& a, std::ostream& out, std::ostream& err) {
  SearchControl control;
  control.threads = a.threads > 0 ? a.threads : default_threads();
  if (a.max_units > 0) control.max_units = a.max_units;
  const int s = std::min(a.s, a.t);
  const int t = std::max(a.s, a.t);

  std::optional<RamseyCheckpoint> resume;
  if (!a.checkpoint.empty() && std::filesystem::exists(a.checkpoint)) {
    resume = checkpoint_from_json(read_json_file(a.checkpoint));
    err << "resuming from " << a.checkpoint << " at order " << resume->current_n << '\n';
  }
  const auto t0 = Clock::now();
  auto last_report = t0;
  std::function<void(const RamseyCheckpoint&)> save = [&](const RamseyCheckpoint& cp) {
    if (!a.checkpoint.empty()) write_json_file(a.checkpoint, to_json(cp));
    const auto now = Clock::now();
    if (now - last_report >= std::chrono::seconds(2)) {
      last_report = now;
      const double el = seconds_since(t0);
      const std::uint64_t done = cp.classes_before + cp.cursor.visited;
      err << "order " << cp.current_n << ": " << done << " classes, " << std::fixed << std::setprecision(0)
          << (el > 0 ? done / el : 0.0) << " classes/s\n";
    }
  };
  RamseyResult r = ramsey_fk(s, t, a.max_n, control, resume, save);
  if (a.s > a.t) {
    std::swap(r.s, r.t);
    if (r.witness) r.witness = complement(*r.witness);
  }
  const double el = seconds_since(t0);
  err << "examined " << r.classes_examined << " classes in " << std::fixed << std::setprecision(2) << el << " s\n";
  if (!a.checkpoint.empty() && !r.interrupted) std::filesystem::remove(a.checkpoint);
  Json j = to_json(r);
  if (a.timing) j["elapsed"] = el;
  out << j.dump(2) << '\n';
  return kOk;
}

struct FMaxArgs {
  int n = 0;
  bool witnesses = false;
  bool extended = false;
  int threads = 0;
  bool timing = false;
};

inline int cmd_fmax(const FMaxArgs& a, std::ostream& out, std::ostream& err) {
  FMaxOptions opt;
  opt.threads = a.threads > 0 ? a.threads : default_threads();
  opt.extended = a.extended;
  const auto t0 = Clock::now();
  const FMaxResult f = f_max(a.n, opt);
  const double el = seconds_since(t0);
  err << "evaluated " << f.pairs_evaluated << " complementary pairs over " << f.classes << " classes\n";
  Json j = to_json(f, a.witnesses);
  if (a.n >= 4) j["via_ramsey"] = to_json(f_via_ramsey(a.n));
  if (a.timing) j["elapsed"] = el;
  out << j.dump(2) << '\n';
  return kOk;
}

inline int cmd_tables(int which, const std::string& format, std::ostream& out) {
  const TableFormat fmt = parse_table_format(format);
  out << render_table(paper_table(which), fmt);
  return kOk;
}

inline int cmd_verify(const std::string& suite, int max_order, std::ostream& out, std::ostream& err) {
  const verify::Report rep = verify::run_suite(suite, max_order);
  for (const verify::Check& c : rep.checks) err << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
  out << rep.to_json().dump(2) << '\n';
  return rep.passed() ? kOk : kVerificationFailure;
}

struct EnumerateArgs {
  int n = 0;
  int shard = 0;
  int shards = 1;
  std::string cursor;
  std::uint64_t limit = 0;
  bool count_only = false;
};

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  enumeration::check_order(a.n);
  if (a.n >= 11) {
    err << "order " << a.n << " has "
        << (a.n == 11 ? "about 1.0e9" : "about 1.65e11") << " classes; this will take a long time\n";
  }
  std::uint64_t emitted = 0;
  auto emit = [&](const Graph& g) {
    ++emitted;
    if (!a.count_only) out << graph6_encode(g) << '\n';
  };
  if (a.shards != 1 || a.shard != 0) {
    if (!a.cursor.empty() || a.limit > 0) throw InputError("--cursor and --limit cannot be combined with shards");
    enumerate_partitioned(a.n, a.shard, a.shards, [&](const Graph& g) {
      emit(g);
      return Visit::Continue;
    });
  } else {
    Enumerator e(a.n);
    if (!a.cursor.empty() && std::filesystem::exists(a.cursor)) {
      const EnumCursor c = cursor_from_json(read_json_file(a.cursor));
      e.seek(c);
      err << "resuming after " << c.visited << " classes\n";
    }
    e.run([&](const Graph& g) {
      emit(g);
      return (a.limit > 0 && emitted >= a.limit) ? Visit::Stop : Visit::Continue;
    });
    if (!a.cursor.empty()) {
      if (e.exhausted()) {
        std::filesystem::remove(a.cursor);
      } else {
        write_json_file(a.cursor, to_json(cursor_save(e)));
      }
    }
  }
  if (a.count_only) out << emitted << '\n';
  err << "emitted " << emitted << " graphs\n";
  return kOk;
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph strength, F_k Ramsey numbers and Nordhaus-Gaddum bounds", "strengthlab"};
  app.require_subcommand(1);

  detail::StrengthArgs sa;
  auto* strength_cmd = app.add_subcommand("strength", "strength of a graph and of its complement");
  strength_cmd->add_option("--edges", sa.edges, "edge list \"n; u v; ...\" with vertices 1..n");
  strength_cmd->add_option("--graph6", sa.graph6, "graph6 string");
  strength_cmd->add_option("--method", sa.method, "fk, brute or both")->capture_default_str();
  strength_cmd->add_flag("--allow-empty-report", sa.allow_empty, "report instead of failing on an edgeless graph");

  detail::RamseyArgs ra;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "r(F_s,F_t) by exhaustive search");
  ramsey_cmd->add_option("--s", ra.s, "first family index")->required()->check(CLI::Range(2, 64));
  ramsey_cmd->add_option("--t", ra.t, "second family index")->required()->check(CLI::Range(2, 64));
  ramsey_cmd->add_option("--max-n", ra.max_n, "largest order to enumerate")->capture_default_str();
  ramsey_cmd->add_option("--threads", ra.threads, "worker threads (default STRENGTHLAB_THREADS or all cores)");
  ramsey_cmd->add_option("--checkpoint", ra.checkpoint, "checkpoint file, resumed from when present");
  ramsey_cmd->add_flag("--timing", ra.timing, "include elapsed seconds in the result");
  ramsey_cmd->add_option("--max-units", ra.max_units, "stop after this many work units (resume later)");

  detail::FMaxArgs fa;
  auto* fmax_cmd = app.add_subcommand("fmax", "f(n) = max str(G) + str(complement) by enumeration");
  fmax_cmd->add_option("--n", fa.n, "order")->required();
  fmax_cmd->add_flag("--witnesses", fa.witnesses, "include the maximizing pair");
  fmax_cmd->add_flag("--extended", fa.extended, "allow order 10");
  fmax_cmd->add_option("--threads", fa.threads, "worker threads");
  fmax_cmd->add_flag("--timing", fa.timing, "include elapsed seconds in the result");

  int which = 0;
  std::string format = "md";
  auto* tables_cmd = app.add_subcommand("tables", "regenerate the tables of small values");
  tables_cmd->add_option("--which", which, "table number 1-4")->required();
  tables_cmd->add_option("--format", format, "csv, json or md")->capture_default_str();

  std::string suite = "all";
  int max_order = 6;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--suite", suite, "all, enumeration, strength, theorems or tables")->capture_default_str();
  verify_cmd->add_option("--max-order", max_order, "largest order checked")->capture_default_str();

  detail::EnumerateArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate", "stream one graph6 line per isomorphism class");
  enum_cmd->add_option("--n", ea.n, "order")->required();
  enum_cmd->add_option("--shard", ea.shard, "shard index")->capture_default_str();
  enum_cmd->add_option("--shards", ea.shards, "shard count")->capture_default_str();
  enum_cmd->add_option("--cursor", ea.cursor, "cursor file, resumed from when present");
  enum_cmd->add_option("--limit", ea.limit, "stop after this many graphs and save the cursor");
  enum_cmd->add_flag("--count", ea.count_only, "print only the number of classes");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (strength_cmd->parsed()) return detail::cmd_strength(sa, out);
    if (ramsey_cmd->parsed()) return detail::cmd_ramsey(ra, out, err);
    if (fmax_cmd->parsed()) return detail::cmd_fmax(fa, out, err);
    if (tables_cmd->parsed()) return detail::cmd_tables(which, format, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(suite, max_order, out, err);
    if (enum_cmd->parsed()) return detail::cmd_enumerate(ea, out, err);
  } catch (const EmptyGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kEmptyGraph;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kInputError;
}

}  // namespace strengthlab::cli
