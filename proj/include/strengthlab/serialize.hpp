#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "strengthlab/bounds.hpp"
#include "strengthlab/enumerate.hpp"
#include "strengthlab/error.hpp"
#include "strengthlab/graph_io.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/strength.hpp"

namespace strengthlab {

using Json = nlohmann::ordered_json;

inline constexpr int kCheckpointVersion = 1;

namespace detail {

template <class T>
T json_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw CursorError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw CursorError(std::string("malformed field '") + key + "'");
  }
}

inline Json graph_json(const Graph& g) {
  Json j;
  j["graph6"] = graph6_encode(g);
  const auto fam = identify_family(g);
  j["family"] = fam ? Json(*fam) : Json(nullptr);
  return j;
}

}  // namespace detail

inline Json to_json(const EnumCursor& c) {
  return Json{{"version", c.version}, {"order", c.order}, {"path", c.path}, {"visited", c.visited}};
}

inline EnumCursor cursor_from_json(const Json& j) {
  EnumCursor c;
  c.version = detail::json_field<int>(j, "version");
  if (c.version != kCursorVersion) throw CursorError("unsupported cursor version " + std::to_string(c.version));
  c.order = detail::json_field<int>(j, "order");
  c.path = detail::json_field<std::vector<std::uint32_t>>(j, "path");
  c.visited = detail::json_field<std::uint64_t>(j, "visited");
  if (c.order < 1 || c.order > kEnumMaxOrder) throw CursorError("cursor order out of range");
  if (c.path.size() >= static_cast<std::size_t>(c.order)) throw CursorError("cursor path longer than the tree depth");
  for (std::size_t i = 0; i < c.path.size(); ++i) {
    if (c.path[i] >= (std::uint32_t{1} << (i + 1))) throw CursorError("cursor mask out of range");
  }
  return c;
}

inline Json to_json(const RamseyCheckpoint& cp) {
  Json checks = Json::array();
  for (const auto& [n, a] : cp.checks) checks.push_back(Json{{"n", n}, {"arrows", a}});
  Json j{{"kind", "ramsey-checkpoint"},
         {"version", kCheckpointVersion},
         {"s", cp.s},
         {"t", cp.t},
         {"n_cap", cp.n_cap},
         {"current_n", cp.current_n},
         {"cursor", to_json(cp.cursor)},
         {"classes_before", cp.classes_before},
         {"checks", checks}};
  j["last_witness_graph6"] = cp.last_witness ? Json(graph6_encode(*cp.last_witness)) : Json(nullptr);
  return j;
}

inline RamseyCheckpoint checkpoint_from_json(const Json& j) {
  if (detail::json_field<std::string>(j, "kind") != "ramsey-checkpoint") throw CursorError("not a ramsey checkpoint");
  if (detail::json_field<int>(j, "version") != kCheckpointVersion) throw CursorError("unsupported checkpoint version");
  RamseyCheckpoint cp;
  cp.s = detail::json_field<int>(j, "s");
  cp.t = detail::json_field<int>(j, "t");
  cp.n_cap = detail::json_field<int>(j, "n_cap");
  cp.current_n = detail::json_field<int>(j, "current_n");
  cp.cursor = cursor_from_json(detail::json_field<Json>(j, "cursor"));
  if (cp.cursor.order != cp.current_n) throw CursorError("checkpoint cursor order mismatch");
  cp.classes_before = detail::json_field<std::uint64_t>(j, "classes_before");
  for (const Json& c : detail::json_field<Json>(j, "checks")) {
    cp.checks.emplace_back(detail::json_field<int>(c, "n"), detail::json_field<bool>(c, "arrows"));
  }
  const Json w = detail::json_field<Json>(j, "last_witness_graph6");
  if (!w.is_null()) {
    try {
      cp.last_witness = graph6_decode(w.get<std::string>());
    } catch (const std::exception& e) {
      throw CursorError(std::string("bad checkpoint witness: ") + e.what());
    }
  }
  return cp;
}

inline Json to_json(const RamseyResult& r) {
  Json j{{"s", r.s}, {"t", r.t}};
  j["status"] = r.interrupted ? "interrupted" : to_string(r.status);
  if (r.status == RamseyStatus::Exact) j["value"] = r.value;
  j["lower"] = r.lower;
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  if (r.witness) {
    j["witness_graph6"] = graph6_encode(*r.witness);
    const auto fam = identify_family(*r.witness);
    const auto cfam = identify_family(complement(*r.witness));
    j["witness_family"] = fam ? Json(*fam) : Json(nullptr);
    j["witness_complement_family"] = cfam ? Json(*cfam) : Json(nullptr);
  } else {
    j["witness_graph6"] = nullptr;
  }
  j["witness_source"] = r.witness_source;
  j["classes_examined"] = r.classes_examined;
  j["closed_form"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& [n, a] : r.checks) checks.push_back(Json{{"n", n}, {"arrows", a}});
  j["checks"] = checks;
  return j;
}

inline Json to_json(const ArrowsResult& a) {
  Json j{{"n", a.n}, {"s", a.s}, {"t", a.t}, {"arrows", a.arrows}};
  j["witness_graph6"] = a.witness ? Json(graph6_encode(*a.witness)) : Json(nullptr);
  j["classes_examined"] = a.classes_examined;
  return j;
}

inline Json to_json(const FMaxResult& f, bool witnesses) {
  Json j{{"n", f.n}, {"f", f.value}, {"classes", f.classes}, {"pairs_evaluated", f.pairs_evaluated}};
  if (witnesses) {
    Json w;
    w["graph"] = detail::graph_json(f.witness);
    w["complement"] = detail::graph_json(f.witness_complement);
    w["strengths"] = Json::array({f.witness_strength, f.complement_strength});
    j["witness"] = w;
  }
  return j;
}

inline Json to_json(const FViaRamsey& f) {
  Json j{{"n", f.n}};
  j["status"] = f.exact() ? "exact" : "bounded";
  if (f.exact()) j["f"] = f.lower;
  j["lower"] = f.lower;
  j["upper"] = f.upper;
  j["min_sum"] = Json::array({f.min_sum_lower, f.min_sum_upper});
  j["reason"] = f.reason();
  return j;
}

inline Json to_json(const BoundsRow& r) {
  Json j{{"n", r.n},
         {"rho", r.rho},
         {"rho_prime", r.rho_prime},
         {"sigma", r.sigma},
         {"sigma_reason", r.sigma_reason},
         {"upper", r.upper}};
  j["f_exact"] = r.f_exact ? Json(*r.f_exact) : Json(nullptr);
  j["f_source"] = r.f_exact ? Json(r.f_source) : Json(nullptr);
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw CursorError("corrupt JSON in " + path + ": " + e.what());
  }
}

/// Writes through a temporary file and renames, so readers never see a
/// half-written file.
inline void write_json_file(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out << j.dump(2) << '\n';
    if (!out) throw InputError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InputError("cannot replace " + path);
}

}  // namespace strengthlab
