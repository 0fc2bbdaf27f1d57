#include <doctest.h>

#include "ecg/cover.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/random_family.hpp"
#include "ecg/special.hpp"

using namespace ecg;

TEST_CASE("verify_cover reports the first violation") {
  const auto c4 = cycle_graph(4);
  CliqueCover good{CoverKind::edge, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  CHECK_FALSE(verify_cover(c4, good));
  CliqueCover missing{CoverKind::edge, {{0, 1}, {1, 2}, {2, 3}}};
  const auto v = verify_cover(c4, missing);
  REQUIRE(v);
  CHECK(v->uncovered_edge == Edge(0, 3));
  CliqueCover not_clique{CoverKind::edge, {{0, 1, 2}}};
  REQUIRE(verify_cover(c4, not_clique));
  CHECK(verify_cover(c4, not_clique)->clique_index == 0u);
  CliqueCover out_of_range{CoverKind::edge, {{0, 9}}};
  CHECK(verify_cover(c4, out_of_range));
  CliqueCover vertices{CoverKind::vertex, {{0, 1}, {2, 3}}};
  CHECK_FALSE(verify_cover(c4, vertices));
  CliqueCover vertices_short{CoverKind::vertex, {{0, 1}}};
  CHECK(verify_cover(c4, vertices_short)->uncovered_vertex == 2);
}

TEST_CASE("edge-disjointness") {
  CHECK(cliques_edge_disjoint({{0, 1, 2}, {2, 3}, {0, 3}}));
  CHECK_FALSE(cliques_edge_disjoint({{0, 1, 2}, {1, 2, 3}}));
}

TEST_CASE("gyarfas bound applicability") {
  CHECK(gyarfas_bound(cycle_graph(5)).value == 3u);
  const auto k3 = gyarfas_bound(complete_graph(3));
  CHECK_FALSE(k3.value);
  CHECK(k3.equivalent.size() == 3);
  CHECK_FALSE(gyarfas_bound(disjoint_union(cycle_graph(5), empty_graph(1))).value);
  CHECK(gyarfas_bound(cocktail_party(3)).value == 3u);
}

TEST_CASE("volume bound") {
  CHECK(volume_bound(complete_graph(5)) == 1);
  CHECK(volume_bound(cycle_graph(5)) == 5);
  CHECK(volume_bound(cocktail_party(3)) == 4);  // 12 edges in triangles
  CHECK(volume_bound(empty_graph(3)) == 0);
}

TEST_CASE("theta_e on named graphs") {
  const auto c5 = theta_e_exact(cycle_graph(5));
  CHECK(c5.value == 5);
  CHECK(c5.optimal);
  CHECK(theta_e_exact(complete_graph(6)).value == 1);
  CHECK(theta_e_exact(empty_graph(4)).value == 0);
  CHECK(theta_e_exact(Graph{}).value == 0);
  CHECK(theta_e_exact(wheel_graph(5)).value == 5);
  CHECK(theta_e_exact(cocktail_party(3)).value == 4);
  CHECK(theta_e_exact(complete_multipartite(2, 3)).value == 4);
  // K_{3,3} is triangle-free.
  CHECK(theta_e_exact(complete_multipartite(3, 2)).value == 9);
}

TEST_CASE("theta_e against kappa of K_e") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_family(Family::arbitrary, 7, seed, 0.55);
    const auto t = theta_e_exact(g);
    REQUIRE(t.optimal);
    CHECK_FALSE(verify_cover(g, t.cover));
    CHECK(t.value == clique_cover_exact(edge_clique_graph(g).graph, 100).value);
    CHECK(t.value >= t.volume);
    CHECK(t.value >= t.packing);
    CHECK(theta_e_exact(g, kDefaultBudget, kDefaultGuard, false).value == t.value);
  }
}

TEST_CASE("budget exhaustion keeps a valid incumbent") {
  bool exercised = false;
  for (std::uint64_t seed = 0; seed < 200 && !exercised; ++seed) {
    const auto g = random_family(Family::arbitrary, 12, seed, 0.5);
    const auto full = theta_e_exact(g);
    if (full.nodes < 10) continue;
    const auto t = theta_e_exact(g, 2);
    CHECK_FALSE(t.optimal);
    CHECK_FALSE(verify_cover(g, t.cover));
    CHECK(t.value >= full.value);
    exercised = true;
  }
  CHECK(exercised);
}

TEST_CASE("clique partition of vertices") {
  const auto k = clique_cover_exact(cycle_graph(5));
  CHECK(k.value == 3);
  CHECK_FALSE(verify_cover(cycle_graph(5), k.cover));
  CHECK(clique_cover_exact(complete_graph(4)).value == 1);
}
