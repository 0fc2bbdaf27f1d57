#include "ecg/graph.hpp"

#include <algorithm>
#include <functional>

#include "ecg/errors.hpp"

namespace ecg {

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, Bitset(n)), labels_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = static_cast<Vertex>(rows_.size());
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InputError("edge endpoint out of range: {" + std::to_string(u) + "," +
                     std::to_string(v) + "} with n=" + std::to_string(n));
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  rows_[u].set(static_cast<std::size_t>(v));
  rows_[v].set(static_cast<std::size_t>(u));
  return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
  labels_.at(static_cast<std::size_t>(v)) = std::move(label);
  has_labels_ = true;
  return *this;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.rows_ = std::move(rows_);
  if (has_labels_) g.labels_ = std::move(labels_);
  g.finish();
  return g;
}

Graph GraphBuilder::build() const& {
  GraphBuilder copy = *this;
  return std::move(copy).build();
}

void Graph::finish() {
  lists_.assign(rows_.size(), {});
  std::size_t twice = 0;
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    lists_[v] = rows_[v].to_vector();
    twice += lists_[v].size();
  }
  edge_count_ = twice / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const std::size_t n = rows.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v].capacity() != n) throw InputError("adjacency row has wrong capacity");
    if (rows[v].test(v)) throw InputError("self-loop at vertex " + std::to_string(v));
  }
  for (std::size_t v = 0; v < n; ++v)
    rows[v].for_each([&](std::size_t u) {
      if (!rows[u].test(v)) throw InputError("adjacency is not symmetric");
    });
  Graph g;
  g.rows_ = std::move(rows);
  g.finish();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
    for (Vertex v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_[v];
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  GraphBuilder b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    if (g.has_labels()) b.set_label(static_cast<Vertex>(i), g.label(vertices[i]));
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const Bitset& vertices) {
  const auto list = vertices.to_vector();
  return induced_subgraph(g, std::span<const Vertex>(list));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> rows(n);
  for (std::size_t v = 0; v < n; ++v) {
    rows[v] = g.row(static_cast<Vertex>(v)).complement();
    rows[v].reset(v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g, const Bitset& within) {
  std::vector<VertexSet> out;
  Bitset left = within;
  while (left.any()) {
    Bitset comp(g.order());
    Bitset frontier(g.order());
    frontier.set(left.find_first());
    while (frontier.any()) {
      comp |= frontier;
      Bitset next(g.order());
      frontier.for_each([&](std::size_t v) { next |= g.row(static_cast<Vertex>(v)); });
      next &= within;
      next -= comp;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(comp.to_vector());
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.full_set());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || da[v] != db[t]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = a.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) ==
             b.adjacent(image[u], static_cast<Vertex>(t));
      if (!ok) continue;
      image[v] = static_cast<Vertex>(t);
      used[t] = true;
      if (extend(v + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace ecg
