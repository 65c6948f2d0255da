#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "strengthlab/cli.hpp"

using namespace strengthlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "strengthlab_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("strength command", "[cli]") {
  const Run r = run_cli({"strength", "--edges", "3;1 2;1 3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["strength"] == 4);
  CHECK(j["order"] == 3);
  CHECK(j["size"] == 2);
  CHECK(j["method"] == "fk-characterization");
  CHECK(j["complement_strength"] == 3);
  CHECK(j["bounds"]["lower_min_degree"] == 4);
  CHECK(j["bounds"]["upper_independence"] == 4);
  CHECK_FALSE(j.contains("elapsed"));

  const Run both = run_cli({"strength", "--graph6", "Bw", "--method", "both"});
  REQUIRE(both.code == 0);
  const Json b = Json::parse(both.out);
  CHECK(b["strength"] == 5);
  CHECK(b["agree"] == true);
  CHECK(b["complement_strength"].is_null());
}

TEST_CASE("strength command errors", "[cli]") {
  CHECK(run_cli({"strength", "--graph6", "D??"}).code == cli::kEmptyGraph);
  const Run empty = run_cli({"strength", "--graph6", "D??", "--allow-empty-report"});
  CHECK(empty.code == 0);
  CHECK(Json::parse(empty.out)["strength"].is_null());
  CHECK(run_cli({"strength", "--edges", "3;1 4"}).code == cli::kInputError);
  CHECK(run_cli({"strength"}).code == cli::kInputError);
  CHECK(run_cli({"strength", "--edges", "2;1 2", "--graph6", "Bw"}).code == cli::kInputError);
  CHECK(run_cli({"strength", "--edges", "2;1 2", "--method", "magic"}).code == cli::kInputError);
  CHECK(run_cli({"nonsense"}).code == cli::kInputError);
  CHECK(run_cli({}).code == cli::kInputError);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("ramsey command", "[cli]") {
  const Run r = run_cli({"ramsey", "--s", "3", "--t", "4", "--threads", "1"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "exact");
  CHECK(j["value"] == 5);
  CHECK(j["witness_graph6"].is_string());
  CHECK_FALSE(j.contains("elapsed"));
  CHECK(Json::parse(run_cli({"ramsey", "--s", "3", "--t", "4", "--timing"}).out).contains("elapsed"));

  const Json swapped = Json::parse(run_cli({"ramsey", "--s", "4", "--t", "3", "--threads", "1"}).out);
  CHECK(swapped["s"] == 4);
  CHECK(swapped["t"] == 3);
  CHECK(swapped["value"] == 5);

  const Json bounded = Json::parse(run_cli({"ramsey", "--s", "4", "--t", "6", "--max-n", "9"}).out);
  CHECK(bounded["status"] == "bounded");
  CHECK(bounded["lower"] == 11);
  CHECK(bounded["witness_family"] == "K_{5,5}");

  CHECK(run_cli({"ramsey", "--s", "3", "--t", "4", "--max-n", "11"}).code == cli::kBudgetError);
  CHECK(run_cli({"ramsey", "--s", "1", "--t", "4"}).code == cli::kInputError);
  CHECK(run_cli({"ramsey", "--s", "3"}).code == cli::kInputError);
}

TEST_CASE("ramsey command resumes from its checkpoint file", "[cli][cursor]") {
  const fs::path cp = scratch_file("ramsey_cp.json");
  const Run full = run_cli({"ramsey", "--s", "3", "--t", "5", "--max-n", "8", "--threads", "2"});
  REQUIRE(full.code == 0);
  Run last;
  int rounds = 0;
  do {
    last = run_cli({"ramsey", "--s", "3", "--t", "5", "--max-n", "8", "--threads", "2", "--checkpoint",
                    cp.string(), "--max-units", "2"});
    REQUIRE(last.code == 0);
    ++rounds;
    REQUIRE(rounds < 50);
  } while (Json::parse(last.out)["status"] == "interrupted");
  CHECK(rounds > 1);
  CHECK_FALSE(fs::exists(cp));
  CHECK(last.out == full.out);
}

TEST_CASE("corrupt checkpoint files are input errors", "[cli][cursor]") {
  const fs::path cp = scratch_file("bad_cp.json");
  write_json_file(cp.string(), Json{{"kind", "ramsey-checkpoint"}, {"version", 7}});
  CHECK(run_cli({"ramsey", "--s", "3", "--t", "5", "--checkpoint", cp.string()}).code == cli::kInputError);
  fs::remove(cp);
}

TEST_CASE("fmax command output does not depend on the thread count", "[cli][parallel]") {
  const Run a = run_cli({"fmax", "--n", "6", "--witnesses", "--threads", "1"});
  const Run b = run_cli({"fmax", "--n", "6", "--witnesses", "--threads", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["f"] == 18);
  CHECK(j["via_ramsey"]["f"] == 18);
  CHECK(j["witness"]["strengths"][0].get<int>() + j["witness"]["strengths"][1].get<int>() == 18);
  CHECK(run_cli({"fmax", "--n", "10"}).code == cli::kBudgetError);
  CHECK(run_cli({"fmax", "--n", "2"}).code == cli::kInputError);
}

TEST_CASE("tables command", "[cli]") {
  const Run csv = run_cli({"tables", "--which", "3", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("\"[28,35]\",10,\"r(3,9)=36\"") != std::string::npos);
  const Run js = run_cli({"tables", "--which", "4", "--format", "json"});
  REQUIRE(js.code == 0);
  const Json rows = Json::parse(js.out);
  REQUIRE(rows.size() == 33);
  CHECK(rows[1]["rho'_n"] == 10);
  CHECK(run_cli({"tables", "--which", "1", "--format", "md"}).code == 0);
  CHECK(run_cli({"tables", "--which", "5"}).code == cli::kInputError);
  CHECK(run_cli({"tables", "--which", "1", "--format", "xml"}).code == cli::kInputError);
}

TEST_CASE("verify command", "[cli]") {
  const Run r = run_cli({"verify", "--suite", "tables", "--max-order", "6"});
  CHECK(r.code == 0);
  CHECK(r.err.find("FAIL") == std::string::npos);
  CHECK(Json::parse(r.out)["passed"] == true);
  CHECK(run_cli({"verify", "--suite", "enumeration", "--max-order", "5"}).code == 0);
  CHECK(run_cli({"verify", "--suite", "bogus"}).code == cli::kInputError);
  CHECK(run_cli({"verify", "--max-order", "11"}).code == cli::kBudgetError);
}

TEST_CASE("enumerate command", "[cli]") {
  CHECK(run_cli({"enumerate", "--n", "5", "--count"}).out == "34\n");
  const Run all = run_cli({"enumerate", "--n", "5"});
  std::vector<std::string> lines;
  std::istringstream in(all.out);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  CHECK(lines.size() == 34);

  std::multiset<std::string> sharded;
  for (int s = 0; s < 3; ++s) {
    std::istringstream part(run_cli({"enumerate", "--n", "5", "--shard", std::to_string(s), "--shards", "3"}).out);
    for (std::string l; std::getline(part, l);) sharded.insert(l);
  }
  CHECK(sharded == std::multiset<std::string>(lines.begin(), lines.end()));

  const fs::path cur = scratch_file("enum_cursor.json");
  std::string resumed;
  for (int i = 0; i < 10 && (i == 0 || fs::exists(cur)); ++i) {
    resumed += run_cli({"enumerate", "--n", "5", "--cursor", cur.string(), "--limit", "10"}).out;
  }
  CHECK(resumed == all.out);
  CHECK_FALSE(fs::exists(cur));
  CHECK(run_cli({"enumerate", "--n", "13"}).code == cli::kBudgetError);
  CHECK(run_cli({"enumerate", "--n", "5", "--shard", "3", "--shards", "3"}).code == cli::kInputError);
}
