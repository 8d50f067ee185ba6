#include "doctest.h"
#include "toric_oracles.hpp"
#include "toric/triples.hpp"

using namespace toric;

TEST_CASE("marker graph of a Hirzebruch degree") {
  for (long long n = 2; n <= 5; ++n)
    for (long long alpha = 1; alpha < n; ++alpha) {
      const MarkerGraph g = marker_graph(hirzebruch_fan(n), make_vec({-alpha, -1}), 1);
      CHECK(g.vertices == std::vector<std::size_t>{0, 2});
      CHECK(g.edges.empty());
      CHECK(g.components == std::vector<Cone>{{0}, {2}});
      CHECK(admissible_components(g) == std::vector<Cone>{{0}, {2}});
    }
}

TEST_CASE("marker graph on P2") {
  const Fan p2 = projective_space_fan(2);
  const IntVec m = make_vec({-1, -1});
  // Direct evaluation: m(e1) = -1, m(e2) = -1, m(-e1-e2) = 2.
  REQUIRE(ray_values(p2, m) == make_vec({-1, -1, 2}));
  const MarkerGraph g = marker_graph(p2, m, 0);
  CHECK(g.vertices == std::vector<std::size_t>{1});
  CHECK(g.components.size() == 1);
  CHECK(admissible_components(g).empty());
}

TEST_CASE("marker graph edge cases") {
  const Fan f2 = hirzebruch_fan(2);
  // m = (-1,0) has values (-1,0,1,0): nothing negative besides rho.
  const MarkerGraph empty = marker_graph(f2, make_vec({-1, 0}), 0);
  CHECK(empty.vertices.empty());
  CHECK(admissible_components(empty).empty());
  CHECK_THROWS_AS(marker_graph(f2, make_vec({0, 0}), 0), std::invalid_argument);
  CHECK_THROWS_AS(marker_graph(f2, make_vec({-1, -1}), 9), std::invalid_argument);

  MarkerGraph single;
  single.vertices = {1, 2};
  single.edges = {{1, 2}};
  single.components = {{1, 2}};
  CHECK(admissible_components(single).empty());
}

TEST_CASE("enumerate triples on F_2 with bound 3") {
  const Fan f2 = hirzebruch_fan(2);
  const auto ts = enumerate_triples(f2, 3);
  const auto brute = oracle::brute_triples_2d(f2, 3);
  REQUIRE(brute.size() == 2);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].m == make_vec({-1, -1}));
  CHECK(ts[0].rho == 1);
  CHECK(ts[0].component == Cone{0});
  CHECK(ts[1].component == Cone{2});
  for (const auto& t : ts) CHECK(brute.count({t.m, t.rho, t.component}) == 1);
}

TEST_CASE("P2 has no admissible triples") {
  const Fan p2 = projective_space_fan(2);
  for (long long B : {1, 3, 5}) {
    CHECK(enumerate_triples(p2, B).empty());
    CHECK(oracle::brute_triples_2d(p2, B).empty());
  }
}

TEST_CASE("Hirzebruch triple counts agree with brute force") {
  for (long long n = 1; n <= 5; ++n) {
    const Fan fan = hirzebruch_fan(n);
    for (long long B : {n, default_bound(fan)}) {
      if (B < 1) continue;
      const auto ts = enumerate_triples(fan, B);
      const auto brute = oracle::brute_triples_2d(fan, B);
      CHECK(ts.size() == static_cast<std::size_t>(2 * (n - 1)));
      CHECK(ts.size() == brute.size());
      for (const auto& t : ts) {
        CHECK(brute.count({t.m, t.rho, t.component}) == 1);
        CHECK(is_admissible(fan, t));
        CHECK_FALSE(std::binary_search(t.component.begin(), t.component.end(), t.rho));
        // Round trip through the graph.
        const auto comps = admissible_components(marker_graph(fan, t.m, t.rho));
        CHECK(std::find(comps.begin(), comps.end(), t.component) != comps.end());
      }
    }
  }
}

TEST_CASE("degree box") {
  const Fan f2 = hirzebruch_fan(2);
  CHECK(default_bound(f2) == 6);
  const auto box = degree_box(f2, 1);
  for (const IntVec& m : box)
    for (const Integer& x : ray_values(f2, m)) CHECK(abs(x) <= 1);
  // Values (-1..1) on e1, e2 with m(-e1+2e2) in range: count directly.
  std::size_t count = 0;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      if (std::abs(-x + 2 * y) <= 1) ++count;
  CHECK(box.size() == count);
  CHECK(std::is_sorted(box.begin(), box.end()));
}

TEST_CASE("is_admissible rejects bad triples") {
  const Fan f2 = hirzebruch_fan(2);
  CHECK(is_admissible(f2, {make_vec({-1, -1}), 1, {0}}));
  CHECK_FALSE(is_admissible(f2, {make_vec({-1, -1}), 1, {0, 2}}));
  CHECK_FALSE(is_admissible(f2, {make_vec({-1, -1}), 0, {2}}));
  CHECK_FALSE(is_admissible(f2, {make_vec({0, -1}), 1, {2}}));
}
