#include <doctest.h>

#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/oracles.hpp"
#include "ecg/random_family.hpp"
#include "ecg/special.hpp"

using namespace ecg;

TEST_CASE("K_e of complete graphs is complete") {
  for (int n = 2; n <= 6; ++n) {
    const auto ke = edge_clique_graph(complete_graph(n));
    CHECK(ke.graph == complete_graph(n * (n - 1) / 2));
  }
}

TEST_CASE("K_e of a triangle-free graph is edgeless") {
  CHECK(edge_clique_graph(cycle_graph(5)).graph.size() == 0);
  CHECK(edge_clique_graph(path_graph(6)).graph.order() == 5);
  CHECK(edge_clique_graph(complete_multipartite(3, 2)).graph.size() == 0);
}

TEST_CASE("K_e of an edgeless graph is empty") {
  const auto ke = edge_clique_graph(empty_graph(4));
  CHECK(ke.graph.order() == 0);
  CHECK(ke.edge_of_vertex.empty());
}

TEST_CASE("vertex_of maps source edges back") {
  const auto g = wheel_graph(4);
  const auto ke = edge_clique_graph(g);
  for (std::size_t i = 0; i < ke.edge_of_vertex.size(); ++i)
    CHECK(ke.vertex_of(ke.edge_of_vertex[i]) == static_cast<Vertex>(i));
  CHECK_FALSE(ke.vertex_of(Edge(0, 2)));
}

TEST_CASE("row kernel matches the pairwise reference, serial and parallel") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_family(Family::arbitrary, 14, seed, 0.5);
    const auto ref = edge_clique_graph_reference(g);
    const auto ser = edge_clique_graph(g, Execution::serial);
    const auto par = edge_clique_graph(g, Execution::parallel);
    CHECK(ser.graph == ref.graph);
    CHECK(par.graph == ref.graph);
    CHECK(par.edge_of_vertex == ref.edge_of_vertex);
  }
}

TEST_CASE("iterated K_e and its guard") {
  // K_e(K_4) = K_6, K_e(K_6) = K_15.
  CHECK(ke_iterate(complete_graph(4), 2) == complete_graph(15));
  CHECK(ke_iterate(cycle_graph(5), 0) == cycle_graph(5));
  CHECK_THROWS_AS(ke_iterate(complete_graph(8), 3, 100), SizeGuardError);
  CHECK_THROWS_AS(ke_iterate(cycle_graph(5), -1), InputError);
}

TEST_CASE("alpha' by brute force on named graphs") {
  CHECK(alpha_prime_bruteforce(cycle_graph(5)).value == 5);
  CHECK(alpha_prime_bruteforce(complete_graph(5)).value == 1);
  CHECK(alpha_prime_bruteforce(cocktail_party(3)).value == 4);
  CHECK(alpha_prime_bruteforce(empty_graph(3)).value == 0);
  const auto r = alpha_prime_bruteforce(wheel_graph(5));
  CHECK(edges_independent(wheel_graph(5), r.edges));
  CHECK(r.value == r.edges.size());
  CHECK_THROWS_AS(alpha_prime_bruteforce(complete_graph(12)), SizeGuardError);
}

TEST_CASE("edges_independent") {
  const auto g = cocktail_party(2);  // C_4
  CHECK(edges_independent(g, {Edge(0, 2), Edge(1, 3)}));
  CHECK_FALSE(edges_independent(complete_graph(3), {Edge(0, 1), Edge(1, 2)}));
}
