#include <doctest.h>

#include <variant>

#include "ecg/cograph.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/random_family.hpp"
#include "ecg/special.hpp"
#include "ecg/structure.hpp"
#include "support.hpp"

using namespace ecg;

TEST_CASE("cotree realizes the input graph") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_family(Family::cograph, 1 + static_cast<int>(seed % 16), seed);
    const auto t = require_cotree(g);
    CHECK(t.realize() == g);
    CHECK(t.leaves(t.root()).size() == g.order());
  }
}

TEST_CASE("cotree of the empty graph") {
  const auto t = require_cotree(Graph{});
  CHECK(t.vertex_count() == 0);
  CHECK(alpha_prime_cograph(Graph{}).value == 0);
}

TEST_CASE("non-cographs produce an induced P4") {
  for (const auto& g : {path_graph(4), cycle_graph(5), path_graph(7), wheel_graph(5)}) {
    const auto r = cotree_decompose(g);
    REQUIRE(std::holds_alternative<NotCograph>(r));
    const auto& p = std::get<NotCograph>(r).p4;
    REQUIRE(p.size() == 4);
    CHECK(g.adjacent(p[0], p[1]));
    CHECK(g.adjacent(p[1], p[2]));
    CHECK(g.adjacent(p[2], p[3]));
    CHECK_FALSE(g.adjacent(p[0], p[2]));
    CHECK_FALSE(g.adjacent(p[0], p[3]));
    CHECK_FALSE(g.adjacent(p[1], p[3]));
  }
  CHECK_THROWS_AS(alpha_prime_cograph(path_graph(4)), NotCographError);
}

TEST_CASE("weighted independent sets on cotrees") {
  const auto g = cocktail_party(3);
  const auto t = require_cotree(g);
  const std::vector<Weight> w{1, 5, 2, 2, 3, 0};
  CHECK(cotree_mwis(t, w) == 6);  // pair {0,1}
  const auto s = cotree_mwis_set(t, w);
  CHECK(s.vertices == VertexSet{0, 1});
  const std::vector<Weight> bad{1, 2};
  CHECK_THROWS_AS(cotree_mwis(t, bad), InputError);
}

TEST_CASE("alpha' of named cographs") {
  CHECK(alpha_prime_cograph(cocktail_party(1)).value == 0);
  for (int n = 2; n <= 8; ++n) CHECK(alpha_prime_cograph(cocktail_party(n)).value == 4);
  CHECK(alpha_prime_cograph(complete_graph(6)).value == 1);
  CHECK(alpha_prime_cograph(make_special("star:5")).value == 5);
  CHECK(alpha_prime_cograph(complete_multipartite(3, 2)).value == 9);  // K_{3,3}
}

TEST_CASE("d' from the cotree matches the neighborhood oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_family(Family::cograph, 13, seed);
    const auto t = require_cotree(g);
    const auto ser = d_prime_all(g, t, Execution::serial);
    const auto par = d_prime_all(g, t, Execution::parallel);
    CHECK(ser == par);
    for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
      const auto nb = induced_subgraph(g, g.neighbors(x));
      CHECK(ser[static_cast<std::size_t>(x)] == mis_exact(nb).value);
      CHECK(d_prime(g, x) == ser[static_cast<std::size_t>(x)]);
    }
  }
}

TEST_CASE("certificates check out and corruption is caught") {
  const auto g = random_family(Family::cograph, 12, 3);
  auto r = alpha_prime_cograph(g);
  CHECK_FALSE(check_certificate(g, r));
  CHECK(r.witness_edges.size() == r.value);
  CHECK(edges_independent(g, r.witness_edges));
  if (!r.chosen.empty()) {
    r.value += 1;
    CHECK(check_certificate(g, r));
  }
}

TEST_CASE("pair recurrence preconditions") {
  const auto g = make_special("star:3");  // hub 0
  const std::vector<Vertex> hub{0}, leaves{1, 2, 3}, none{};
  CHECK(alpha_prime_pair(g, hub, leaves) == 3);
  CHECK(alpha_prime_pair(g, leaves, hub) == 3);
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(alpha_prime_pair(g, all, none) == 3);
  CHECK_THROWS_AS(alpha_prime_pair(g, none, hub), InputError);
  CHECK_THROWS_AS(alpha_prime_pair(g, hub, hub), InputError);
  // Leaf 1 sees the hub but not leaf 2.
  CHECK_THROWS_AS(alpha_prime_pair(g, std::vector<Vertex>{1}, std::vector<Vertex>{0, 2}), InputError);
  CHECK_THROWS_AS(alpha_prime_pair(path_graph(4), std::vector<Vertex>{0, 1, 2, 3}, none), InputError);
}

TEST_CASE("pair recurrence under union and join") {
  const auto a = cocktail_party(3);
  const auto b = complete_graph(3);
  const std::vector<Vertex> av{0, 1, 2, 3, 4, 5}, bv{6, 7, 8};
  // Union: nothing crosses, B contributes nothing.
  CHECK(alpha_prime_pair(disjoint_union(a, b), av, bv) == 4);
  // Join with K_3 on the B side.
  const auto j = join(a, b);
  const auto brute = alpha_prime_bruteforce(j).value;
  CHECK(alpha_prime_pair(j, av, std::vector<Vertex>{}) == 4);
  const std::vector<Vertex> everything{0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(alpha_prime_pair(j, everything, std::vector<Vertex>{}) == brute);
}

TEST_CASE("trivially perfect recognition") {
  CHECK(is_trivially_perfect(make_special("star:4")).trivially_perfect);
  CHECK(is_trivially_perfect(complete_graph(4)).trivially_perfect);
  const auto c4 = is_trivially_perfect(cycle_graph(4));
  CHECK_FALSE(c4.trivially_perfect);
  CHECK(c4.witness_is_cycle);
  const auto p4 = is_trivially_perfect(path_graph(4));
  CHECK_FALSE(p4.trivially_perfect);
  CHECK_FALSE(p4.witness_is_cycle);
  CHECK(p4.witness.size() == 4);
}

TEST_CASE("connected cograph enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 12, 33, 90, 261};
  for (int n = 1; n <= 8; ++n) {
    const auto all = testing::connected_cographs(n);
    CHECK(all.size() == expected[static_cast<std::size_t>(n - 1)]);
    for (const auto& c : all) {
      CHECK(c.graph.order() == static_cast<std::size_t>(n));
      CHECK(is_connected(c.graph));
      CHECK_FALSE(find_induced_p4(c.graph));
    }
  }
}

TEST_CASE("connected cographs on 5 vertices are pairwise non-isomorphic") {
  const auto all = testing::connected_cographs(5);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(are_isomorphic(all[i].graph, all[j].graph));
}

TEST_CASE("connected trivially perfect enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) {
    const auto all = testing::connected_trivially_perfect(n);
    CHECK(all.size() == expected[static_cast<std::size_t>(n - 1)]);
    for (const auto& t : all) CHECK(is_trivially_perfect(t.graph).trivially_perfect);
  }
}
