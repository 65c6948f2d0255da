#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "strengthlab/bounds.hpp"
#include "strengthlab/ramsey.hpp"
#include "strengthlab/strength.hpp"

using namespace strengthlab;

namespace {

template <class Fn>
void for_nonempty_classes(int max_order, Fn&& fn) {
  for (int n = 2; n <= max_order; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (!g.empty_edges()) fn(g);
      return Visit::Continue;
    });
  }
}

}  // namespace

TEST_CASE("str <= 2n-k exactly when F_k sits in the complement", "[property]") {
  for_nonempty_classes(6, [](const Graph& g) {
    const int n = g.order();
    const int str = oracle::strength_by_permutations(g);
    const Graph c = complement(g);
    for (int k = 1; k <= n; ++k) {
      const bool inside = oracle::contains_by_injection(c, build_fk(k));
      REQUIRE((str <= 2 * n - k) == inside);
      REQUIRE((str >= 2 * n - k + 1) == !inside);
    }
  });
}

TEST_CASE("str = 2n-k exactly when F_k sits in the complement, for delta = n-k >= 1", "[property]") {
  std::size_t checked = 0;
  for_nonempty_classes(6, [&](const Graph& g) {
    if (min_degree(g) < 1) return;
    const int n = g.order();
    const int k = n - min_degree(g);
    const bool inside = oracle::contains_by_injection(complement(g), build_fk(k));
    REQUIRE((oracle::strength_by_permutations(g) == 2 * n - k) == inside);
    ++checked;
  });
  CHECK(checked > 0);
}

TEST_CASE("with an isolated vertex, F_n in the complement does not force str = n", "[property]") {
  // K_2 plus two isolated vertices: the complement contains F_4 but str = 3.
  const Graph g = disjoint_union(complete(2), Graph(2));
  CHECK(min_degree(g) == 0);
  CHECK(oracle::contains_by_injection(complement(g), build_fk(4)));
  CHECK(oracle::strength_by_permutations(g) == 3);
  CHECK(strength(g).value == 3);
}

TEST_CASE("range and sandwich through order 7", "[property]") {
  for_nonempty_classes(7, [](const Graph& g) {
    const int n = g.order();
    const int str = strength_value(g);
    REQUIRE(str >= 3);
    REQUIRE(str <= 2 * n - 1);
    REQUIRE(str <= 2 * n - oracle::independence_by_subsets(g));
    if (min_degree(g) >= 1) REQUIRE(str >= n + min_degree(g));
  });
}

TEST_CASE("every minimum degree k in [1,n-1] is attained with str = n+k", "[property]") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<bool> found(static_cast<std::size_t>(n), false);
    enumerate_graphs(n, [&](const Graph& g) {
      const int d = min_degree(g);
      if (d >= 1 && !found[d] && strength_value(g) == n + d) found[d] = true;
      return Visit::Continue;
    });
    for (int k = 1; k < n; ++k) CHECK(found[k]);
  }
}

TEST_CASE("isolated vertices do not change the strength", "[property]") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (min_degree(g) < 1) return Visit::Continue;
      const int base = oracle::strength_by_permutations(g);
      for (int m = 1; m <= 3; ++m) {
        REQUIRE(strength_isolated_invariance_check(g, m));
        REQUIRE(strength_value(disjoint_union(g, Graph(m))) == base);
      }
      return Visit::Continue;
    });
  }
}

TEST_CASE("exhaustive Ramsey values respect the Chvatal bound", "[property]") {
  for (int s = 2; s <= 5; ++s) {
    for (int t = s; t <= 8; ++t) {
      const auto r = ramsey_fk(s, t, 8);
      if (r.status != RamseyStatus::Exact) continue;
      CHECK(r.value >= chvatal_fk_lower(s, t));
      CHECK(r.value >= t);
    }
  }
}

TEST_CASE("r(P_3, F_t) from the matching formula equals the F_3 closed form", "[property]") {
  for (int t = 2; t <= 8; ++t) {
    const Graph c = complement(build_fk(t));
    const int n = t;
    const int expected = oracle::matching_by_edge_subsets(c) * 2 == n
                             ? n
                             : 2 * n - 2 * oracle::matching_by_edge_subsets(c) - 1;
    CHECK(ramsey_p3(build_fk(t)) == expected);
    CHECK(ramsey_p3(build_fk(t)) == r_f3_formula(t));
  }
}

TEST_CASE("Table 4 crossover pattern", "[property]") {
  for (int n = 3; n <= 35; ++n) {
    const int a = rho(n);
    const int b = rho_prime(n);
    if (n <= 20) CHECK(a >= b);
    if (n == 21 || n == 22 || n == 25 || n == 26 || n == 30) CHECK(a == b);
    if (n == 27 || (n >= 31 && n != 30)) CHECK(a < b);
  }
}

TEST_CASE("threshold s satisfies both inequalities used for rho'", "[property]") {
  for (int n = 4; n <= 35; ++n) {
    const int s = fk_threshold(n);
    CHECK(1 + (s - 1) * (s / 2) > n);
    CHECK(s <= n);
  }
}

TEST_CASE("non-arrowing orders give lower bounds on f(n)", "[property]") {
  for (int n = 4; n <= 8; ++n) {
    const int f = f_max(n).value;
    for (int s = 2; s <= n - 1; ++s) {
      for (int t = s; t <= n - 1; ++t) {
        if (!arrows_fk(n, s, t).arrows) CHECK(f >= 4 * n - (s + t) + 2);
      }
    }
  }
}

TEST_CASE("f(n) lies between the closed-form bounds", "[property]") {
  for (int n = 3; n <= 8; ++n) {
    const int f = f_max(n).value;
    CHECK(std::max(rho(n), rho_prime(n)) <= f);
    CHECK(f <= 4 * n - sigma(n).value);
  }
}
