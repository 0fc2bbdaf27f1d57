#include <doctest.h>

#include <algorithm>

#include "ecg/bitset.hpp"
#include "ecg/codec.hpp"
#include "ecg/errors.hpp"
#include "ecg/graph.hpp"
#include "ecg/random_family.hpp"
#include "ecg/special.hpp"
#include "ecg/structure.hpp"
#include "ecg/cograph.hpp"
#include "ecg/dh.hpp"

using namespace ecg;

TEST_CASE("bitset word boundaries") {
  Bitset b(130);
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 4);
  CHECK(b.find_first() == 0);
  CHECK(b.find_next(0) == 63);
  CHECK(b.find_next(64) == 129);
  CHECK(b.find_next(129) == Bitset::npos);
  const auto c = b.complement();
  CHECK(c.count() == 126);
  CHECK_FALSE(c.intersects(b));
  Bitset all(130);
  all.set_all();
  CHECK(all.count() == 130);
  CHECK((all - b) == c);
  CHECK(b.is_subset_of(all));
  CHECK(b.to_vector() == std::vector<int>{0, 63, 64, 129});
}

TEST_CASE("graph builder rejects loops and out-of-range endpoints") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(b.add_edge(0, 3), InputError);
  CHECK_THROWS_AS(b.add_edge(-1, 2), InputError);
  b.add_edge(0, 1).add_edge(1, 0);
  const auto g = std::move(b).build();
  CHECK(g.size() == 1);
}

TEST_CASE("edges are sorted and neighbors consistent") {
  const auto g = Graph::from_edges(4, std::vector<Edge>{{3, 1}, {0, 2}, {1, 0}});
  const auto e = g.edges();
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(e.front() == Edge(0, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("from_rows rejects asymmetric rows") {
  std::vector<Bitset> rows(2, Bitset(2));
  rows[0].set(1);
  CHECK_THROWS_AS(Graph::from_rows(rows), InputError);
}

TEST_CASE("induced subgraph and complement") {
  const auto c5 = cycle_graph(5);
  const std::vector<Vertex> keep{0, 1, 2};
  const auto p = induced_subgraph(c5, keep);
  CHECK(p.size() == 2);
  CHECK(complement(c5).size() == 5);
  CHECK(are_isomorphic(complement(c5), c5));
  CHECK_FALSE(are_isomorphic(c5, path_graph(5)));
}

TEST_CASE("components") {
  const auto g = disjoint_union(path_graph(3), complete_graph(2));
  const auto cc = connected_components(g);
  REQUIRE(cc.size() == 2);
  CHECK(cc[0] == VertexSet{0, 1, 2});
  CHECK(cc[1] == VertexSet{3, 4});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(empty_graph(1)));
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(path_graph(2)) == "A_");
  CHECK(to_graph6(empty_graph(0)) == "?");
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("graph6 round trip including the long header") {
  for (int n : {1, 7, 62, 63, 70}) {
    const auto g = random_family(Family::arbitrary, n, 11, 0.3);
    const auto s = to_graph6(g);
    CHECK(parse_graph6(s) == g);
    if (n >= 63) CHECK(s[0] == '~');
  }
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), InputError);
  CHECK_THROWS_AS(parse_graph6("C"), InputError);      // too short
  CHECK_THROWS_AS(parse_graph6("C~~"), InputError);    // too long
  CHECK_THROWS_AS(parse_graph6("A`"), InputError);     // padding bit set
  CHECK_THROWS_AS(parse_graph6("C\x7f"), InputError);  // byte out of range
}

TEST_CASE("json edge list") {
  const auto g = parse_json_edge_list(R"({"n": 4, "edges": [[0,1],[2,3]]})");
  CHECK(g.size() == 2);
  CHECK(parse_json_edge_list(to_json_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_json_edge_list(R"({"n": 2, "edges": [[0,0]]})"), InputError);
  CHECK_THROWS_AS(parse_json_edge_list(R"({"n": 2, "edges": [[0,5]]})"), InputError);
  CHECK_THROWS_AS(parse_json_edge_list("{not json"), InputError);
  CHECK(parse_graph_auto(R"({"n":3,"edges":[[0,1]]})").size() == 1);
  CHECK(parse_graph_auto("C~") == complete_graph(4));
}

TEST_CASE("special graphs") {
  const auto cp3 = cocktail_party(3);
  CHECK(cp3.order() == 6);
  CHECK(cp3.size() == 12);
  CHECK_FALSE(cp3.adjacent(0, 1));
  CHECK(cp3.adjacent(0, 2));
  CHECK(complete_multipartite(2, 3) == cp3);
  const auto w5 = wheel_graph(5);
  CHECK(w5.degree(5) == 5);
  CHECK(make_special("star:3").size() == 3);
  CHECK(make_special("multipartite:2,3") == cp3);
  CHECK_THROWS_AS(make_special("cp:0"), InputError);
  CHECK_THROWS_AS(make_special("banana:3"), InputError);
  CHECK_THROWS_AS(cycle_graph(2), InputError);
}

TEST_CASE("equivalent vertices and isolated vertices") {
  const auto k3 = complete_graph(3);
  CHECK(equivalent_pairs(k3).equivalent_pairs.size() == 3);
  CHECK(equivalent_pairs(cycle_graph(5)).equivalent_pairs.empty());
  CHECK(equivalent_pairs(empty_graph(2)).isolated == VertexSet{0, 1});
}

TEST_CASE("odd wheels") {
  CHECK_FALSE(is_odd_wheel_free(wheel_graph(5)));
  CHECK(is_odd_wheel_free(wheel_graph(4)));
  CHECK(is_odd_wheel_free(cocktail_party(3)));
  CHECK_FALSE(is_odd_wheel_free(complete_graph(4)));  // K_4 = W_3
  const auto w = find_odd_wheel(wheel_graph(7));
  REQUIRE(w);
  CHECK(w->hub == 7);
  CHECK(w->rim.size() % 2 == 1);
}

TEST_CASE("induced subgraph scans") {
  CHECK(find_induced_p4(path_graph(4)));
  CHECK_FALSE(find_induced_p4(cycle_graph(4)));
  CHECK(find_induced_c4(cycle_graph(4)));
  CHECK_FALSE(find_induced_c4(complete_graph(5)));
  const auto c = find_induced_cycle(cycle_graph(6), 6);
  REQUIRE(c);
  CHECK(c->size() == 6);
  CHECK_FALSE(find_induced_cycle(wheel_graph(5), 4));
}

TEST_CASE("random families are deterministic and in-class") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = random_family(Family::cograph, 12, seed);
    CHECK(c == random_family(Family::cograph, 12, seed));
    CHECK_FALSE(find_induced_p4(c));
    const auto d = random_family(Family::distance_hereditary, 12, seed);
    CHECK(std::holds_alternative<PruningSequence>(pruning_sequence(d)));
  }
  CHECK(parse_family("dh") == Family::distance_hereditary);
  CHECK_THROWS_AS(parse_family("tree"), InputError);
}
