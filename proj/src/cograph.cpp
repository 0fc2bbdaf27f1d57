#include "ecg/cograph.hpp"

#include <algorithm>
#include <functional>

#include "ecg/structure.hpp"

namespace ecg {

Cotree::Cotree(std::vector<CotreeNode> nodes, std::size_t vertex_count)
    : nodes_(std::move(nodes)), vertex_count_(vertex_count) {}

VertexSet Cotree::leaves(int i) const {
  VertexSet out;
  std::vector<int> stack{i};
  while (!stack.empty()) {
    const auto& nd = node(stack.back());
    stack.pop_back();
    if (nd.label == CotreeLabel::leaf) {
      out.push_back(nd.vertex);
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Cotree::realize() const {
  GraphBuilder b(vertex_count_);
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    const auto& nd = node(i);
    if (nd.label != CotreeLabel::join) continue;
    const auto l = leaves(nd.left);
    const auto r = leaves(nd.right);
    for (Vertex u : l)
      for (Vertex v : r) b.add_edge(u, v);
  }
  return std::move(b).build();
}

NotCographError::NotCographError(NotCograph w)
    : InputError("graph is not a cograph (induced P4 on " + std::to_string(w.p4.at(0)) + "," +
                 std::to_string(w.p4.at(1)) + "," + std::to_string(w.p4.at(2)) + "," +
                 std::to_string(w.p4.at(3)) + ")"),
      witness_(std::move(w)) {}

namespace {

struct StuckAt {
  Bitset residual;
};

// Components of the relation "adjacent in G" or "nonadjacent in G",
// restricted to s.
std::vector<Bitset> split(const Graph& g, const Bitset& s, bool in_complement) {
  std::vector<Bitset> out;
  Bitset left = s;
  while (left.any()) {
    Bitset comp(g.order());
    Bitset frontier(g.order());
    frontier.set(left.find_first());
    while (frontier.any()) {
      comp |= frontier;
      Bitset next(g.order());
      frontier.for_each([&](std::size_t v) {
        if (in_complement) {
          Bitset non = s - g.row(static_cast<Vertex>(v));
          next |= non;
        } else {
          next |= g.row(static_cast<Vertex>(v));
        }
      });
      next &= s;
      next -= comp;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g) {}

  std::vector<CotreeNode> run() {
    if (g_.order() > 0) build(g_.full_set());
    return std::move(nodes_);
  }

 private:
  int push(CotreeNode nd) {
    nodes_.push_back(nd);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int build(const Bitset& s) {
    if (s.count() == 1) return push({CotreeLabel::leaf, -1, -1, static_cast<Vertex>(s.find_first())});
    auto parts = split(g_, s, false);
    CotreeLabel label = CotreeLabel::union_;
    if (parts.size() == 1) {
      parts = split(g_, s, true);
      label = CotreeLabel::join;
      if (parts.size() == 1) throw StuckAt{s};
    }
    int acc = build(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      const int rhs = build(parts[k]);
      acc = push({label, acc, rhs, -1});
    }
    return acc;
  }

  const Graph& g_;
  std::vector<CotreeNode> nodes_;
};

// Induced P_4 inside s by scanning candidate middle edges b-c for an end a in
// N(b) \ N[c] and an end d in N(c) \ N[b] with a, d nonadjacent.
std::vector<Vertex> p4_within(const Graph& g, const Bitset& s) {
  for (std::size_t b = s.find_first(); b != Bitset::npos; b = s.find_next(b)) {
    const Bitset nb = g.row(static_cast<Vertex>(b)) & s;
    for (std::size_t c = nb.find_first(); c != Bitset::npos; c = nb.find_next(c)) {
      Bitset ends_a = nb - g.row(static_cast<Vertex>(c));
      ends_a.reset(c);
      Bitset ends_d = (g.row(static_cast<Vertex>(c)) & s) - g.row(static_cast<Vertex>(b));
      ends_d.reset(b);
      for (std::size_t a = ends_a.find_first(); a != Bitset::npos; a = ends_a.find_next(a)) {
        const Bitset d = ends_d - g.row(static_cast<Vertex>(a));
        if (d.any())
          return {static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c),
                  static_cast<Vertex>(d.find_first())};
      }
    }
  }
  return {};
}

std::vector<Weight> evaluate(const Cotree& t, std::span<const Weight> w) {
  std::vector<Weight> val(t.nodes().size());
  for (std::size_t i = 0; i < val.size(); ++i) {
    const auto& nd = t.nodes()[i];
    switch (nd.label) {
      case CotreeLabel::leaf:
        val[i] = w[static_cast<std::size_t>(nd.vertex)];
        break;
      case CotreeLabel::join:
        val[i] = std::max(val[static_cast<std::size_t>(nd.left)], val[static_cast<std::size_t>(nd.right)]);
        break;
      case CotreeLabel::union_:
        val[i] = val[static_cast<std::size_t>(nd.left)] + val[static_cast<std::size_t>(nd.right)];
        break;
    }
  }
  return val;
}

VertexSet reconstruct(const Cotree& t, const std::vector<Weight>& val, std::span<const Weight> w, int i) {
  const auto& nd = t.node(i);
  const auto vi = [&](int k) { return val[static_cast<std::size_t>(k)]; };
  switch (nd.label) {
    case CotreeLabel::leaf:
      if (w[static_cast<std::size_t>(nd.vertex)] > 0) return {nd.vertex};
      return {};
    case CotreeLabel::union_: {
      auto l = reconstruct(t, val, w, nd.left);
      auto r = reconstruct(t, val, w, nd.right);
      VertexSet out;
      std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
      return out;
    }
    case CotreeLabel::join:
      if (vi(nd.left) > vi(nd.right)) return reconstruct(t, val, w, nd.left);
      if (vi(nd.right) > vi(nd.left)) return reconstruct(t, val, w, nd.right);
      {
        auto l = reconstruct(t, val, w, nd.left);
        auto r = reconstruct(t, val, w, nd.right);
        return r < l ? r : l;
      }
  }
  return {};
}

std::vector<Weight> neighborhood_indicator(const Graph& g, Vertex x) {
  std::vector<Weight> w(g.order(), 0);
  for (Vertex z : g.neighbors(x)) w[static_cast<std::size_t>(z)] = 1;
  return w;
}

}  // namespace

std::variant<Cotree, NotCograph> cotree_decompose(const Graph& g) {
  try {
    return Cotree(Decomposer(g).run(), g.order());
  } catch (const StuckAt& stuck) {
    return NotCograph{p4_within(g, stuck.residual)};
  }
}

Cotree require_cotree(const Graph& g) {
  auto r = cotree_decompose(g);
  if (auto* bad = std::get_if<NotCograph>(&r)) throw NotCographError(std::move(*bad));
  return std::get<Cotree>(std::move(r));
}

Weight cotree_mwis(const Cotree& t, std::span<const Weight> w) {
  if (t.nodes().empty()) return 0;
  if (w.size() != t.vertex_count()) throw InputError("cotree_mwis: weight vector length mismatch");
  return evaluate(t, w).back();
}

WeightedSet cotree_mwis_set(const Cotree& t, std::span<const Weight> w) {
  if (t.nodes().empty()) return {};
  if (w.size() != t.vertex_count()) throw InputError("cotree_mwis_set: weight vector length mismatch");
  const auto val = evaluate(t, w);
  return {val.back(), reconstruct(t, val, w, t.root())};
}

Weight d_prime(const Graph& g, Vertex x, std::size_t guard) {
  const auto nbrs = g.neighbors(x);
  if (nbrs.empty()) return 0;
  const Graph local = induced_subgraph(g, nbrs);
  auto t = cotree_decompose(local);
  if (const auto* tree = std::get_if<Cotree>(&t)) {
    const std::vector<Weight> unit(local.order(), 1);
    return cotree_mwis(*tree, unit);
  }
  return mis_exact(local, {}, guard).value;
}

std::vector<Weight> d_prime_all(const Graph& g, const Cotree& t, Execution exec) {
  const auto n = static_cast<long long>(g.order());
  std::vector<Weight> out(g.order(), 0);
  const bool par = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 8) if (par)
  for (long long x = 0; x < n; ++x) {
    const auto w = neighborhood_indicator(g, static_cast<Vertex>(x));
    out[static_cast<std::size_t>(x)] = cotree_mwis(t, w);
  }
  return out;
}

AlphaPrimeResult alpha_prime_cograph(const Graph& g, const Cotree& t, Execution exec) {
  if (t.vertex_count() != g.order()) throw InputError("alpha_prime_cograph: cotree does not match graph");
  AlphaPrimeResult r;
  r.d_prime = d_prime_all(g, t, exec);
  const auto outer = cotree_mwis_set(t, r.d_prime);
  r.value = static_cast<std::size_t>(outer.value);
  r.chosen = outer.vertices;
  for (Vertex x : r.chosen) {
    const auto w = neighborhood_indicator(g, x);
    r.witnesses.push_back(cotree_mwis_set(t, w).vertices);
  }
  r.witness_edges = witness_edges_of(r.chosen, r.witnesses);
  return r;
}

AlphaPrimeResult alpha_prime_cograph(const Graph& g, Execution exec) {
  return alpha_prime_cograph(g, require_cotree(g), exec);
}

namespace {

class PairRecurrence {
 public:
  PairRecurrence(const Graph& g, const Cotree& ta, VertexSet a_ids) : g_(g), ta_(ta), a_ids_(std::move(a_ids)) {}

  // alpha'(A_i, B) with A_i the leaves under node i of the cotree of G[A].
  std::size_t eval(int i, const Bitset& b) {
    const auto& nd = ta_.node(i);
    if (b.any() && !touches(i, b)) return eval(i, Bitset(g_.order()));
    if (nd.label == CotreeLabel::leaf) return alpha_of(b);
    if (nd.label == CotreeLabel::union_) return eval(nd.left, b) + eval(nd.right, b);
    return std::max(eval(nd.left, b | members(nd.right)), eval(nd.right, b | members(nd.left)));
  }

  Bitset members(int i) const {
    Bitset out(g_.order());
    for (Vertex v : ta_.leaves(i)) out.set(static_cast<std::size_t>(a_ids_[static_cast<std::size_t>(v)]));
    return out;
  }

 private:
  bool touches(int i, const Bitset& b) const {
    const Bitset mine = members(i);
    bool any = false;
    mine.for_each([&](std::size_t v) { any = any || g_.row(static_cast<Vertex>(v)).intersects(b); });
    return any;
  }

  // alpha(G[B]) on a fresh cotree of the induced subgraph.
  std::size_t alpha_of(const Bitset& b) const {
    if (b.none()) return 0;
    const Graph sub = induced_subgraph(g_, b);
    const Cotree t = require_cotree(sub);
    const std::vector<Weight> unit(sub.order(), 1);
    return static_cast<std::size_t>(cotree_mwis(t, unit));
  }

  const Graph& g_;
  const Cotree& ta_;
  VertexSet a_ids_;
};

}  // namespace

std::size_t alpha_prime_pair(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const auto n = static_cast<Vertex>(g.order());
  if (a.empty()) throw InputError("alpha_prime_pair: A must be nonempty");
  Bitset as(g.order()), bs(g.order());
  for (Vertex v : a) {
    if (v < 0 || v >= n) throw InputError("alpha_prime_pair: vertex out of range");
    as.set(static_cast<std::size_t>(v));
  }
  for (Vertex v : b) {
    if (v < 0 || v >= n) throw InputError("alpha_prime_pair: vertex out of range");
    bs.set(static_cast<std::size_t>(v));
  }
  if (as.intersects(bs)) throw InputError("alpha_prime_pair: A and B must be disjoint");

  std::size_t cross = 0;
  as.for_each([&](std::size_t v) { cross += g.row(static_cast<Vertex>(v)).intersection_count(bs); });
  if (cross != 0 && cross != as.count() * bs.count())
    throw InputError("alpha_prime_pair: G[A ∪ B] is neither the join nor the union of G[A] and G[B]");
  if (std::holds_alternative<NotCograph>(cotree_decompose(induced_subgraph(g, as | bs))))
    throw InputError("alpha_prime_pair: G[A ∪ B] is not a cograph");

  const VertexSet a_ids = as.to_vector();
  const Graph ga = induced_subgraph(g, std::span<const Vertex>(a_ids));
  const Cotree ta = require_cotree(ga);
  PairRecurrence rec(g, ta, a_ids);
  return rec.eval(ta.root(), bs);
}

TriviallyPerfectReport is_trivially_perfect(const Graph& g) {
  if (auto c4 = find_induced_c4(g)) return {false, std::move(*c4), true};
  if (auto p4 = find_induced_p4(g)) return {false, std::move(*p4), false};
  return {};
}

}  // namespace ecg
