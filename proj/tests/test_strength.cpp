#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "strengthlab/enumerate.hpp"
#include "strengthlab/strength.hpp"

using namespace strengthlab;

TEST_CASE("strength of a numbering", "[strength]") {
  CHECK(strength_of_numbering(complete(2), Numbering::of(complete(2), {1, 2})) == 3);
  const Graph p3 = path(3);  // centre is vertex 1
  CHECK(strength_of_numbering(p3, Numbering::of(p3, {2, 1, 3})) == 4);
  const Graph k3 = complete(3);
  for (auto labels : {std::vector<int>{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}) {
    CHECK(strength_of_numbering(k3, Numbering::of(k3, labels)) == 5);
  }
  CHECK_THROWS_AS(strength_of_numbering(Graph(3), Numbering::of(Graph(3), {1, 2, 3})), EmptyGraphError);
}

TEST_CASE("brute-force strength examples", "[strength]") {
  CHECK(strength_bruteforce(complete_bipartite(1, 2)).value == 4);
  CHECK(strength_bruteforce(disjoint_union(Graph(1), complete(2))).value == 3);
  CHECK(strength_bruteforce(disjoint_union(complete(2), complete(3))).value == 7);
  CHECK_THROWS_AS(strength_bruteforce(Graph(4)), EmptyGraphError);
  CHECK_THROWS_AS(strength_bruteforce(Graph(0)), EmptyGraphError);
  const auto r = strength_bruteforce(path(4));
  CHECK(r.method == StrengthMethod::BruteForce);
  CHECK(r.witness.strength_value() == r.value);
}

TEST_CASE("brute-force witness is the lexicographically smallest optimum", "[strength][oracle]") {
  for (int n = 2; n <= 6; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (g.empty_edges()) return Visit::Continue;
      const auto r = strength_bruteforce(g);
      std::vector<int> labels(static_cast<std::size_t>(n));
      std::iota(labels.begin(), labels.end(), 1);
      std::vector<int> first;
      do {
        if (Numbering::of(g, labels).strength_value() == r.value) {
          first = labels;
          break;
        }
      } while (std::next_permutation(labels.begin(), labels.end()));
      REQUIRE(r.witness.labels() == first);
      return Visit::Continue;
    });
  }
}

TEST_CASE("max F_k subgraph", "[strength]") {
  for (int n = 1; n <= 8; ++n) CHECK(max_fk_subgraph(Graph(n)) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(max_fk_subgraph(complete(n)) == n);
  CHECK(max_fk_subgraph(complement(complete_bipartite(1, 2))) == 2);
  CHECK_THROWS_AS(max_fk_subgraph(Graph(0)), InputError);
}

TEST_CASE("characterized strength examples", "[strength]") {
  for (int n = 2; n <= 8; ++n) CHECK(strength(complete(n)).value == 2 * n - 1);
  CHECK(strength(complete_bipartite(2, 3)).value == 7);
  CHECK(strength(copies(2, complete(3))).value == 9);
  const auto r = strength(complete_bipartite(2, 3));
  CHECK(r.method == StrengthMethod::FkCharacterization);
  REQUIRE(r.max_fk_in_complement);
  CHECK(r.value == 2 * 5 - *r.max_fk_in_complement);
  CHECK(r.witness.strength_value() == r.value);
  CHECK_FALSE(r.witness_from_embedding);
  CHECK_THROWS_AS(strength(Graph(5)), EmptyGraphError);
}

TEST_CASE("large graphs get witnesses from the F_k embedding", "[strength]") {
  for (const Graph& g : {complete_bipartite(5, 9), copies(3, complete(4)), cycle(20), build_fk(30), path(40)}) {
    const auto r = strength(g);
    CHECK(r.witness_from_embedding);
    CHECK(r.witness.strength_value() == r.value);
    CHECK(r.value == strength_value(g));
  }
  CHECK(strength(complete_bipartite(5, 9)).value == 2 * 5 + 9);
  CHECK(strength(complete(20)).value == 39);
}

TEST_CASE("embedding numbering attains 2n-k", "[strength]") {
  for (int n = 2; n <= 7; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (g.empty_edges()) return Visit::Continue;
      const Graph comp = complement(g);
      const int k = max_fk_subgraph(comp);
      const auto image = contains_subgraph(comp, build_fk(k));
      REQUIRE(image);
      REQUIRE(numbering_from_embedding(g, *image).strength_value() <= 2 * n - k);
      return Visit::Continue;
    });
  }
}

TEST_CASE("both methods agree with the permutation oracle through order 7", "[strength][oracle]") {
  for (int n = 2; n <= 7; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (g.empty_edges()) return Visit::Continue;
      const int expected = oracle::strength_by_permutations(g);
      REQUIRE(strength(g).value == expected);
      REQUIRE(strength_bruteforce(g).value == expected);
      REQUIRE(strength_value(g) == expected);
      return Visit::Continue;
    });
  }
}

TEST_CASE("bounds", "[strength]") {
  CHECK(strength_lower_bound(complete(4)) == 7);
  CHECK(strength_lower_bound(path(4)) == 5);
  CHECK(strength_lower_bound(complete_bipartite(3, 3)) == 9);
  CHECK(strength(complete_bipartite(3, 3)).value == 9);
  CHECK_THROWS_AS(strength_lower_bound(disjoint_union(complete(2), Graph(1))), InputError);
  for (int n = 2; n <= 8; ++n) CHECK(strength_upper_bound_beta(complete(n)) == 2 * n - 1);
  CHECK(strength_upper_bound_beta(complete_bipartite(2, 3)) == 7);
  CHECK_THROWS_AS(strength_upper_bound_beta(Graph(3)), EmptyGraphError);
}

TEST_CASE("isolated vertex invariance", "[strength]") {
  CHECK(strength_isolated_invariance_check(complete(2), 3));
  CHECK(strength_isolated_invariance_check(path(4), 2));
  CHECK(strength_isolated_invariance_check(disjoint_union(complete(3), complete(2)), 1));
}

TEST_CASE("closed forms for unions and bipartite graphs", "[strength]") {
  for (int s = 2; s <= 5; ++s) {
    for (int t = s; t <= 5; ++t) CHECK(strength(disjoint_union(complete(s), complete(t))).value == 2 * (s + t) - 3);
  }
  for (int s = 1; s <= 5; ++s) {
    for (int t = s; t <= 5; ++t) CHECK(strength(complete_bipartite(s, t)).value == 2 * s + t);
  }
}
