#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/serialize.hpp"

using namespace strengthlab;

namespace {

/// Arrowing decided over every labelled graph of order n.
bool arrows_by_labelled_graphs(int n, int s, int t) {
  const Graph fs = build_fk(s);
  const Graph ft = build_fk(t);
  const int slots = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
    const Graph g = oracle::from_code(n, code);
    if (!oracle::contains_by_injection(g, fs) && !oracle::contains_by_injection(complement(g), ft)) return false;
  }
  return true;
}

void check_witness(const Graph& w, int s, int t) {
  CHECK_FALSE(oracle::contains_by_injection(w, build_fk(s)));
  CHECK_FALSE(oracle::contains_by_injection(complement(w), build_fk(t)));
}

}  // namespace

TEST_CASE("closed forms", "[ramsey]") {
  CHECK(chvatal_fk_lower(3, 4) == 5);
  CHECK(chvatal_fk_lower(4, 6) == 10);
  CHECK(chvatal_fk_lower(2, 2) == 2);
  CHECK_THROWS_AS(chvatal_fk_lower(4, 3), InputError);
  CHECK_THROWS_AS(chvatal_fk_lower(1, 3), InputError);
  CHECK(chvatal_tree_formula(2, 5) == 5);
  CHECK(chvatal_tree_formula(4, 4) == 10);
  CHECK_THROWS_AS(chvatal_tree_formula(1, 4), InputError);
  for (int s = 2; s <= 8; ++s) {
    for (int t = s; t <= 8; ++t) CHECK(chvatal_tree_formula(s, t / 2 + 1) == chvatal_fk_lower(s, t));
  }
  CHECK(r_f3_formula(5) == 5);
  CHECK(r_f3_formula(4) == 5);
  CHECK(r_f4_formula(6) == 11);
  CHECK(r_f4_formula(7) == 13);
  CHECK_THROWS_AS(r_f3_formula(1), InputError);
  CHECK_THROWS_AS(r_f4_formula(2), InputError);
}

TEST_CASE("ramsey_p3", "[ramsey]") {
  CHECK(ramsey_p3(path(3)) == 3);
  CHECK(ramsey_p3(build_fk(4)) == 5);
  CHECK(ramsey_p3(build_fk(5)) == 5);
  for (int t = 2; t <= 8; ++t) CHECK(ramsey_p3(build_fk(t)) == r_f3_formula(t));
  CHECK_THROWS_AS(ramsey_p3(Graph(1)), InputError);
  CHECK_THROWS_AS(ramsey_p3(disjoint_union(complete(2), Graph(1))), InputError);
}

TEST_CASE("classical registry", "[ramsey]") {
  CHECK(known_classical(4, 5) == 25);
  CHECK(known_classical(5, 4) == 25);
  CHECK(known_classical(2, 9) == 9);
  CHECK_FALSE(known_classical(5, 5).has_value());
  CHECK_FALSE(known_classical(0, 3).has_value());
  CHECK(known_classical(1, 7) == 1);
  for (int t = 2; t <= 40; ++t) CHECK(known_classical(2, t) == t);
  const std::map<std::pair<int, int>, int> nine = {{{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14},
                                                   {{3, 6}, 18}, {{3, 7}, 23}, {{3, 8}, 28},
                                                   {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
  CHECK(KnownRamseyRegistry::standard().entries() == nine);
}

TEST_CASE("family identification", "[ramsey]") {
  CHECK(identify_family(complete_bipartite(3, 3)) == "K_{3,3}");
  CHECK(identify_family(copies(2, complete(3))) == "2K_3");
  CHECK(identify_family(complete(4)) == "K_4");
  CHECK_FALSE(identify_family(cycle(5)).has_value());
}

TEST_CASE("arrows_fk examples", "[ramsey]") {
  const auto a = arrows_fk(6, 4, 4);
  CHECK_FALSE(a.arrows);
  REQUIRE(a.witness);
  CHECK(isomorphic(*a.witness, complete_bipartite(3, 3)));
  CHECK(isomorphic(complement(*a.witness), copies(2, complete(3))));
  CHECK(arrows_fk(7, 4, 4).arrows);
  for (int n = 2; n <= 8; ++n) CHECK(arrows_fk(n, 2, 2).arrows);
  CHECK_THROWS_AS(arrows_fk(11, 3, 3), BudgetError);
  CHECK_THROWS_AS(arrows_fk(0, 3, 3), InputError);
  CHECK_THROWS_AS(arrows_fk(5, 1, 3), InputError);
}

TEST_CASE("arrows_fk agrees with the labelled-graph oracle through order 6", "[ramsey][oracle]") {
  for (int n = 1; n <= 6; ++n) {
    for (int s = 2; s <= 5; ++s) {
      for (int t = s; t <= 5; ++t) {
        const auto a = arrows_fk(n, s, t);
        REQUIRE(a.arrows == arrows_by_labelled_graphs(n, s, t));
        if (!a.arrows) {
          REQUIRE(a.witness);
          CHECK(a.witness->order() == n);
          check_witness(*a.witness, s, t);
        }
      }
    }
  }
}

TEST_CASE("ramsey_fk examples", "[ramsey]") {
  const auto r = ramsey_fk(3, 4);
  CHECK(r.status == RamseyStatus::Exact);
  CHECK(r.value == 5);
  CHECK(ramsey_fk(4, 5).value == 9);
  for (int t = 2; t <= 8; ++t) {
    const auto q = ramsey_fk(2, t);
    CHECK(q.status == RamseyStatus::Exact);
    CHECK(q.value == t);
  }
  CHECK_THROWS_AS(ramsey_fk(3, 3, 11), BudgetError);
}

TEST_CASE("exact results carry a verified witness of order value-1", "[ramsey]") {
  for (int s = 2; s <= 4; ++s) {
    for (int t = s; t <= 5; ++t) {
      const auto r = ramsey_fk(s, t, 9);
      REQUIRE(r.status == RamseyStatus::Exact);
      REQUIRE(r.witness);
      CHECK(r.witness->order() == r.value - 1);
      check_witness(*r.witness, s, t);
      CHECK(r.lower == r.value);
      REQUIRE(r.upper);
      CHECK(*r.upper == r.value);
      REQUIRE_FALSE(r.checks.empty());
      CHECK(r.checks.back() == std::make_pair(r.value, true));
    }
  }
}

TEST_CASE("formula agreement", "[ramsey]") {
  for (int t = 3; t <= 8; ++t) CHECK(ramsey_fk(3, t, 9).value == r_f3_formula(t));
  for (int t = 3; t <= 5; ++t) CHECK(ramsey_fk(4, t, 9).value == r_f4_formula(t));
}

TEST_CASE("sandwich between the Chvatal bound and the classical value", "[ramsey]") {
  for (int s = 2; s <= 6; ++s) {
    for (int t = s; t <= 6; ++t) {
      const auto r = ramsey_fk(s, t, 8);
      if (r.status != RamseyStatus::Exact) continue;
      CHECK(chvatal_fk_lower(s, t) <= r.value);
      if (const auto c = known_classical(s, t)) CHECK(r.value <= *c);
    }
  }
}

TEST_CASE("symmetry", "[ramsey]") {
  for (auto [s, t] : {std::pair{3, 4}, {2, 5}, {4, 4}, {3, 6}}) {
    const auto a = ramsey_fk(s, t, 8);
    const auto b = ramsey_fk(t, s, 8);
    CHECK(a.value == b.value);
    CHECK(b.s == t);
    CHECK(b.t == s);
    REQUIRE(b.witness);
    check_witness(*b.witness, t, s);
  }
}

TEST_CASE("capped searches report bounds", "[ramsey]") {
  const auto r = ramsey_fk(4, 5, 8);
  CHECK(r.status == RamseyStatus::Bounded);
  CHECK(r.lower == 9);
  CHECK(r.upper == 25);
  REQUIRE(r.witness);
  CHECK(r.witness->order() == 8);
  check_witness(*r.witness, 4, 5);
  const auto u = ramsey_fk(5, 6, 6);
  CHECK(u.status == RamseyStatus::Bounded);
  CHECK_FALSE(u.upper.has_value());
  CHECK(u.lower >= chvatal_fk_lower(5, 6));
}

TEST_CASE("fk_ramsey_bounds", "[ramsey]") {
  CHECK(fk_ramsey_bounds(2, 7).exact());
  CHECK(fk_ramsey_bounds(3, 6).lower == 7);
  CHECK(fk_ramsey_bounds(4, 7).lower == 13);
  CHECK(fk_ramsey_bounds(7, 4).lower == 13);
  CHECK(fk_ramsey_bounds(5, 5).lower == 10);
  const auto b = fk_ramsey_bounds(5, 6);
  CHECK_FALSE(b.exact());
  CHECK(b.lower == 13);
  CHECK_FALSE(b.upper.has_value());
}

TEST_CASE("arrows_fk is independent of the thread count", "[ramsey][parallel]") {
  const auto a = arrows_fk(8, 4, 5);
  SearchControl c;
  c.threads = 3;
  const auto b = arrows_fk(8, 4, 5, c);
  CHECK_FALSE(a.arrows);
  CHECK(a.arrows == b.arrows);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(*a.witness == *b.witness);
  CHECK(arrows_fk(8, 3, 5, c).arrows == arrows_fk(8, 3, 5).arrows);
}

TEST_CASE("arrows_fk resumes after interruption", "[ramsey][cursor]") {
  SearchControl c;
  c.max_units = 40;
  std::optional<EnumCursor> cursor;
  ArrowsResult last;
  int rounds = 0;
  do {
    last = arrows_fk(8, 3, 5, c, cursor);
    cursor = last.cursor;
    ++rounds;
    REQUIRE(rounds < 100);
  } while (last.interrupted);
  CHECK(rounds > 1);
  CHECK(last.arrows);
  CHECK(last.classes_examined == 12346);
}

TEST_CASE("ramsey_fk checkpoint round trip matches an uninterrupted run", "[ramsey][cursor]") {
  const auto full = ramsey_fk(4, 5, 9);
  SearchControl c;
  c.max_units = 300;
  std::optional<RamseyCheckpoint> resume;
  RamseyResult r;
  int rounds = 0;
  do {
    std::optional<RamseyCheckpoint> saved;
    r = ramsey_fk(4, 5, 9, c, resume, [&](const RamseyCheckpoint& cp) { saved = cp; });
    if (r.interrupted) {
      REQUIRE(saved);
      resume = checkpoint_from_json(Json::parse(to_json(*saved).dump()));
    }
    ++rounds;
    REQUIRE(rounds < 100);
  } while (r.interrupted);
  CHECK(rounds > 1);
  CHECK(r.status == RamseyStatus::Exact);
  CHECK(r.value == full.value);
  CHECK(r.classes_examined == full.classes_examined);
  CHECK(r.checks == full.checks);
  CHECK(*r.witness == *full.witness);
  CHECK(r.witness_source == full.witness_source);
}

TEST_CASE("checkpoints from another search are rejected", "[ramsey][cursor]") {
  RamseyCheckpoint cp;
  cp.s = 3;
  cp.t = 5;
  cp.n_cap = 9;
  cp.current_n = 5;
  cp.cursor.order = 5;
  CHECK_THROWS_AS(ramsey_fk(4, 5, 9, {}, cp), CursorError);
  CHECK_THROWS_AS(checkpoint_from_json(Json::parse(R"({"kind":"ramsey-checkpoint"})")), CursorError);
}
