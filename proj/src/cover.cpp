#include "ecg/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ecg/oracles.hpp"
#include "ecg/structure.hpp"

namespace ecg {

std::optional<CoverViolation> verify_cover(const Graph& g, const CliqueCover& cover) {
  const auto n = static_cast<Vertex>(g.order());
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    const auto& c = cover.cliques[i];
    for (Vertex v : c)
      if (v < 0 || v >= n)
        return CoverViolation{"member " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v), i, {}, {}};
    if (!is_clique(g, c)) return CoverViolation{"member " + std::to_string(i) + " is not a clique", i, {}, {}};
  }
  if (cover.kind == CoverKind::vertex) {
    Bitset seen = g.empty_set();
    for (const auto& c : cover.cliques)
      for (Vertex v : c) seen.set(static_cast<std::size_t>(v));
    for (Vertex v = 0; v < n; ++v)
      if (!seen.test(static_cast<std::size_t>(v)))
        return CoverViolation{"vertex " + std::to_string(v) + " is not covered", {}, {}, v};
    return std::nullopt;
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (const auto& c : cover.cliques) {
      if (std::binary_search(c.begin(), c.end(), e.u) && std::binary_search(c.begin(), c.end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      return CoverViolation{"edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not covered", {}, e, {}};
  }
  return std::nullopt;
}

bool cliques_edge_disjoint(const CliqueList& cliques) {
  std::map<Edge, std::size_t> owner;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t a = 0; a < cliques[i].size(); ++a)
      for (std::size_t b = a + 1; b < cliques[i].size(); ++b)
        if (!owner.emplace(Edge(cliques[i][a], cliques[i][b]), i).second) return false;
  return true;
}

GyarfasBound gyarfas_bound(const Graph& g) {
  GyarfasBound out;
  const auto eq = equivalent_pairs(g);
  out.isolated = eq.isolated;
  out.equivalent = eq.equivalent_pairs;
  if (!eq.isolated.empty() || !eq.equivalent_pairs.empty()) {
    out.reason = !eq.isolated.empty() ? "graph has isolated vertices" : "graph has equivalent vertices";
    if (!eq.isolated.empty() && !eq.equivalent_pairs.empty()) out.reason = "graph has isolated and equivalent vertices";
    return out;
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < g.order() + 1) ++k;
  out.value = k;
  return out;
}

std::size_t volume_bound(const Graph& g, std::size_t guard) {
  if (g.size() == 0) return 0;
  const std::size_t w = clique_number(g, guard);
  const std::size_t per = w * (w - 1) / 2;
  return (g.size() + per - 1) / per;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::uint64_t budget, std::size_t guard) : edges_(g.edges()), budget_(budget) {
    const std::size_t m = edges_.size();
    for (const auto& c : maximal_cliques(g, guard)) {
      if (c.size() < 2) continue;
      Bitset covered(m);
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) covered.set(edge_index(Edge(c[a], c[b])));
      cliques_.push_back(c);
      clique_edges_.push_back(std::move(covered));
    }
    containing_.assign(m, {});
    co_cover_.assign(m, Bitset(m));
    for (std::size_t k = 0; k < cliques_.size(); ++k)
      clique_edges_[k].for_each([&](std::size_t e) {
        containing_[e].push_back(k);
        co_cover_[e] |= clique_edges_[k];
      });
    packing_order_.resize(m);
    std::iota(packing_order_.begin(), packing_order_.end(), std::size_t{0});
    std::stable_sort(packing_order_.begin(), packing_order_.end(),
                     [&](std::size_t a, std::size_t b) { return containing_[a].size() < containing_[b].size(); });
  }

  std::size_t packing_bound(const Bitset& uncovered) const {
    Bitset blocked(edges_.size());
    std::size_t count = 0;
    for (std::size_t e : packing_order_) {
      if (!uncovered.test(e) || blocked.test(e)) continue;
      ++count;
      blocked |= co_cover_[e];
    }
    return count;
  }

  void greedy() {
    Bitset uncovered(edges_.size());
    uncovered.set_all();
    std::vector<std::size_t> pick;
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t k = 0; k < cliques_.size(); ++k) {
        const auto c = clique_edges_[k].intersection_count(uncovered);
        if (c > gain) {
          gain = c;
          best = k;
        }
      }
      pick.push_back(best);
      uncovered -= clique_edges_[best];
    }
    best_ = pick;
  }

  void solve(std::size_t lower) {
    lower_ = lower;
    if (edges_.empty()) {
      exhausted_ = false;
      return;
    }
    greedy();
    Bitset uncovered(edges_.size());
    uncovered.set_all();
    std::vector<std::size_t> chosen;
    dfs(uncovered, chosen);
  }

  std::vector<VertexSet> best_cover() const {
    std::vector<VertexSet> out;
    for (auto k : best_) out.push_back(cliques_[k]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t root_packing() const {
    Bitset all(edges_.size());
    all.set_all();
    return packing_bound(all);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t edge_index(Edge e) const {
    return static_cast<std::size_t>(std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin());
  }

  void dfs(const Bitset& uncovered, std::vector<std::size_t>& chosen) {
    if (exhausted_ || best_.size() <= lower_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + packing_bound(uncovered) >= best_.size()) return;

    std::size_t branch_edge = Bitset::npos;
    std::size_t fewest = 0;
    uncovered.for_each([&](std::size_t e) {
      if (branch_edge == Bitset::npos || containing_[e].size() < fewest) {
        branch_edge = e;
        fewest = containing_[e].size();
      }
    });

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (gain, clique)
    for (auto k : containing_[branch_edge]) order.emplace_back(clique_edges_[k].intersection_count(uncovered), k);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    for (const auto& [gain, k] : order) {
      chosen.push_back(k);
      dfs(uncovered - clique_edges_[k], chosen);
      chosen.pop_back();
      if (exhausted_) return;
    }
  }

  std::vector<Edge> edges_;
  std::uint64_t budget_;
  CliqueList cliques_;
  std::vector<Bitset> clique_edges_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<Bitset> co_cover_;
  std::vector<std::size_t> packing_order_;
  std::vector<std::size_t> best_;
  std::size_t lower_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ThetaResult theta_e_exact(const Graph& g, std::uint64_t budget, std::size_t guard, bool gyarfas_pruning) {
  check_guard("theta_e_exact", g.order(), guard);
  ThetaResult r;
  r.gyarfas = gyarfas_bound(g).value;
  r.volume = volume_bound(g, guard);
  CoverSearch search(g, budget, guard);
  r.packing = search.root_packing();
  const std::size_t lower = std::max({gyarfas_pruning ? r.gyarfas.value_or(0) : 0, r.volume, r.packing});
  search.solve(lower);
  r.cover = {CoverKind::edge, search.best_cover()};
  r.value = r.cover.cliques.size();
  r.optimal = !search.exhausted();
  r.nodes = search.nodes();
  return r;
}

KappaResult clique_cover_exact(const Graph& g, std::size_t guard) {
  check_guard("clique_cover_exact", g.order(), guard);
  const auto col = chromatic_exact(complement(g), guard);
  return {col.colors, {CoverKind::vertex, col.classes}};
}

}  // namespace ecg
