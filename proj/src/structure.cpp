#include "ecg/structure.hpp"

#include <algorithm>
#include <functional>

namespace ecg {

EquivalenceReport equivalent_pairs(const Graph& g) {
  EquivalenceReport out;
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Bitset> closed(g.order());
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = g.row(v);
    closed[v].set(static_cast<std::size_t>(v));
    if (g.degree(v) == 0) out.isolated.push_back(v);
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x))
      if (x < y && closed[x] == closed[y]) out.equivalent_pairs.emplace_back(x, y);
  return out;
}

std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          // Climb both tree paths to the common ancestor.
          std::vector<Vertex> left, right;
          Vertex a = u, b = v;
          while (depth[a] > depth[b]) left.push_back(a), a = parent[a];
          while (depth[b] > depth[a]) right.push_back(b), b = parent[b];
          while (a != b) {
            left.push_back(a), a = parent[a];
            right.push_back(b), b = parent[b];
          }
          left.push_back(a);
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return left;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<OddWheel> find_odd_wheel(const Graph& g) {
  for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
    const auto nbrs = g.neighbors(x);
    const std::vector<Vertex> ids(nbrs.begin(), nbrs.end());
    const Graph local = induced_subgraph(g, std::span<const Vertex>(ids));
    if (auto cycle = find_odd_cycle(local)) {
      OddWheel w{x, {}};
      for (Vertex v : *cycle) w.rim.push_back(ids[static_cast<std::size_t>(v)]);
      return w;
    }
  }
  return std::nullopt;
}

namespace {

// Calls f on every k-subset (sorted) until f returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<Vertex>&)>& f) {
  if (k > n) return false;
  std::vector<Vertex> idx(k);
  std::function<bool(std::size_t, Vertex)> rec = [&](std::size_t pos, Vertex start) -> bool {
    if (pos == k) return f(idx);
    for (Vertex v = start; v <= static_cast<Vertex>(n - (k - pos)); ++v) {
      idx[pos] = v;
      if (rec(pos + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

// If the induced subgraph on s is a single cycle, returns it in cyclic order.
std::optional<std::vector<Vertex>> as_cycle(const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex a : s) {
    int deg = 0;
    for (Vertex b : s) deg += g.adjacent(a, b) ? 1 : 0;
    if (deg != 2) return std::nullopt;
  }
  std::vector<Vertex> order{s[0]};
  Vertex prev = -1, cur = s[0];
  while (order.size() < s.size()) {
    Vertex next = -1;
    for (Vertex b : s)
      if (b != prev && b != cur && g.adjacent(cur, b)) {
        next = b;
        break;
      }
    if (next == s[0] || next < 0) return std::nullopt;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (!g.adjacent(cur, s[0])) return std::nullopt;
  return order;
}

}  // namespace

std::optional<std::vector<Vertex>> find_induced_p4(const Graph& g) {
  std::optional<std::vector<Vertex>> found;
  for_each_subset(g.order(), 4, [&](const std::vector<Vertex>& s) {
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (g.adjacent(s[i], s[j])) ++deg[i], ++deg[j], ++edges;
    if (edges != 3) return false;
    int ends = 0;
    for (int d : deg) {
      if (d == 0 || d == 3) return false;
      ends += d == 1;
    }
    if (ends != 2) return false;
    std::vector<Vertex> path;
    for (int i = 0; i < 4; ++i)
      if (deg[i] == 1) {
        path.push_back(s[i]);
        break;
      }
    while (path.size() < 4)
      for (Vertex v : s)
        if (std::find(path.begin(), path.end(), v) == path.end() && g.adjacent(path.back(), v)) {
          path.push_back(v);
          break;
        }
    found = std::move(path);
    return true;
  });
  return found;
}

std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int k) {
  std::optional<std::vector<Vertex>> found;
  if (k < 4) return found;
  for_each_subset(g.order(), static_cast<std::size_t>(k), [&](const std::vector<Vertex>& s) {
    found = as_cycle(g, s);
    return found.has_value();
  });
  return found;
}

std::optional<std::vector<Vertex>> find_induced_c4(const Graph& g) { return find_induced_cycle(g, 4); }

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

}  // namespace ecg
