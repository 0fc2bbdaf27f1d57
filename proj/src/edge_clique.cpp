#include "ecg/edge_clique.hpp"

#include <algorithm>

#include "ecg/oracles.hpp"

namespace ecg {
namespace {

bool pair_in_clique(const Graph& g, Edge e, Edge f) {
  const Vertex pts[4] = {e.u, e.v, f.u, f.v};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] != pts[j] && !g.adjacent(pts[i], pts[j])) return false;
  return true;
}

}  // namespace

std::optional<Vertex> EdgeCliqueGraph::vertex_of(Edge e) const {
  const auto it = std::lower_bound(edge_of_vertex.begin(), edge_of_vertex.end(), e);
  if (it == edge_of_vertex.end() || *it != e) return std::nullopt;
  return static_cast<Vertex>(it - edge_of_vertex.begin());
}

EdgeCliqueGraph edge_clique_graph(const Graph& g, Execution exec) {
  EdgeCliqueGraph out;
  out.edge_of_vertex = g.edges();
  const auto& edges = out.edge_of_vertex;
  const auto m = static_cast<long long>(edges.size());
  std::vector<Bitset> rows(edges.size(), Bitset(edges.size()));

  const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (long long i = 0; i < m; ++i) {
    const Edge e = edges[static_cast<std::size_t>(i)];
    Bitset inside = g.row(e.u) & g.row(e.v);
    inside.set(static_cast<std::size_t>(e.u));
    inside.set(static_cast<std::size_t>(e.v));
    auto& row = rows[static_cast<std::size_t>(i)];
    inside.for_each([&](std::size_t c) {
      const Bitset reach = g.row(static_cast<Vertex>(c)) & inside;
      for (std::size_t d = reach.find_next(c); d != Bitset::npos; d = reach.find_next(d)) {
        const Edge f(static_cast<Vertex>(c), static_cast<Vertex>(d));
        const auto j = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), f) - edges.begin());
        if (j != static_cast<std::size_t>(i)) row.set(j);
      }
    });
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

EdgeCliqueGraph edge_clique_graph_reference(const Graph& g) {
  EdgeCliqueGraph out;
  out.edge_of_vertex = g.edges();
  const auto& edges = out.edge_of_vertex;
  GraphBuilder b(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (pair_in_clique(g, edges[i], edges[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = std::move(b).build();
  return out;
}

Graph ke_iterate(const Graph& g, int rounds, std::size_t guard) {
  if (rounds < 0) throw InputError("ke_iterate: rounds must be >= 0");
  Graph cur = g;
  for (int r = 0; r < rounds; ++r) {
    check_guard("ke_iterate", cur.size(), guard);
    cur = edge_clique_graph(cur).graph;
  }
  return cur;
}

IndependentEdges alpha_prime_bruteforce(const Graph& g, std::size_t guard) {
  check_guard("alpha_prime_bruteforce", g.size(), guard);
  const auto ke = edge_clique_graph(g);
  const auto mis = mis_exact(ke.graph, {}, guard);
  IndependentEdges out;
  out.value = static_cast<std::size_t>(mis.value);
  for (Vertex v : mis.vertices) out.edges.push_back(ke.edge_of_vertex[static_cast<std::size_t>(v)]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool edges_independent(const Graph& g, const std::vector<Edge>& edges) {
  for (const auto& e : edges)
    if (!g.adjacent(e.u, e.v)) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i] == edges[j] || pair_in_clique(g, edges[i], edges[j])) return false;
  return true;
}

}  // namespace ecg
