#include "ecg/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace ecg {
namespace {

class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& g) : g_(g) {}

  CliqueList run() {
    Bitset r(g_.order());
    expand(r, g_.full_set(), g_.empty_set());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(Bitset& r, Bitset p, Bitset x) {
    if (p.none()) {
      if (x.none()) out_.push_back(r.to_vector());
      return;
    }
    std::size_t pivot = Bitset::npos;
    std::size_t best = 0;
    auto consider = [&](std::size_t u) {
      const auto c = p.intersection_count(g_.row(static_cast<Vertex>(u)));
      if (pivot == Bitset::npos || c > best) {
        pivot = u;
        best = c;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bitset branch = p - g_.row(static_cast<Vertex>(pivot));
    branch.for_each([&](std::size_t v) {
      const auto& nv = g_.row(static_cast<Vertex>(v));
      r.set(v);
      expand(r, p & nv, x & nv);
      r.reset(v);
      p.reset(v);
      x.set(v);
    });
  }

  const Graph& g_;
  CliqueList out_;
};

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, std::vector<Weight> w) : g_(g), w_(std::move(w)), best_set_(g.order()) {}

  WeightedSet run() {
    Bitset chosen(g_.order());
    Bitset p = g_.full_set();
    go(std::move(p), 0, chosen);
    return {best_, best_set_.to_vector()};
  }

 private:
  // Shrinks p in place, moving forced vertices into `chosen`.
  void reduce(Bitset& p, Weight& cur, Bitset& chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = p.find_first(); v != Bitset::npos; v = p.find_next(v)) {
        if (w_[v] == 0) {
          p.reset(v);
          changed = true;
          continue;
        }
        Bitset nv = g_.row(static_cast<Vertex>(v)) & p;
        if (nv.none()) {
          cur += w_[v];
          chosen.set(v);
          p.reset(v);
          changed = true;
          continue;
        }
        // u adjacent to v with N_p[v] inside N_p[u] and w(v) >= w(u): some
        // optimum avoids u.
        for (std::size_t u = nv.find_first(); u != Bitset::npos; u = nv.find_next(u)) {
          if (w_[v] < w_[u]) continue;
          Bitset rest = nv;
          rest.reset(u);
          if (rest.is_subset_of(g_.row(static_cast<Vertex>(u)))) {
            p.reset(u);
            changed = true;
          }
        }
        if (changed) break;
      }
    }
  }

  Weight clique_partition_bound(Bitset q) const {
    Weight bound = 0;
    while (q.any()) {
      const std::size_t v = q.find_first();
      Weight top = w_[v];
      q.reset(v);
      Bitset cand = q & g_.row(static_cast<Vertex>(v));
      while (cand.any()) {
        const std::size_t u = cand.find_first();
        top = std::max(top, w_[u]);
        q.reset(u);
        cand.reset(u);
        cand &= g_.row(static_cast<Vertex>(u));
      }
      bound += top;
    }
    return bound;
  }

  void go(Bitset p, Weight cur, Bitset chosen) {
    reduce(p, cur, chosen);
    if (p.none()) {
      if (cur > best_ || !have_best_) {
        best_ = cur;
        best_set_ = chosen;
        have_best_ = true;
      }
      return;
    }
    Weight total = 0;
    p.for_each([&](std::size_t v) { total += w_[v]; });
    if (have_best_ && cur + total <= best_) return;
    if (have_best_ && cur + clique_partition_bound(p) <= best_) return;

    std::size_t pick = Bitset::npos;
    std::size_t deg = 0;
    p.for_each([&](std::size_t v) {
      const auto d = p.intersection_count(g_.row(static_cast<Vertex>(v)));
      if (pick == Bitset::npos || d > deg) {
        pick = v;
        deg = d;
      }
    });

    Bitset with = p - g_.row(static_cast<Vertex>(pick));
    with.reset(pick);
    Bitset chosen_with = chosen;
    chosen_with.set(pick);
    go(std::move(with), cur + w_[pick], std::move(chosen_with));

    p.reset(pick);
    go(std::move(p), cur, std::move(chosen));
  }

  const Graph& g_;
  std::vector<Weight> w_;
  Weight best_ = 0;
  bool have_best_ = false;
  Bitset best_set_;
};

class ColoringSearch {
 public:
  explicit ColoringSearch(const Graph& g) : g_(g), color_(g.order(), -1) {}

  Coloring run() {
    const std::size_t n = g_.order();
    if (n == 0) return {};
    best_ = n + 1;
    lower_ = greedy_clique_size();
    search(0, 0);
    Coloring out;
    out.colors = best_;
    out.classes.assign(best_, {});
    for (std::size_t v = 0; v < n; ++v) out.classes[static_cast<std::size_t>(best_color_[v])].push_back(static_cast<Vertex>(v));
    std::sort(out.classes.begin(), out.classes.end());
    return out;
  }

 private:
  std::size_t greedy_clique_size() const {
    std::size_t best = 0;
    for (Vertex s = 0; s < static_cast<Vertex>(g_.order()); ++s) {
      Bitset cand = g_.row(s);
      std::size_t size = 1;
      while (cand.any()) {
        std::size_t pick = Bitset::npos, deg = 0;
        cand.for_each([&](std::size_t u) {
          const auto d = cand.intersection_count(g_.row(static_cast<Vertex>(u)));
          if (pick == Bitset::npos || d > deg) {
            pick = u;
            deg = d;
          }
        });
        ++size;
        cand &= g_.row(static_cast<Vertex>(pick));
      }
      best = std::max(best, size);
    }
    return best;
  }

  void search(std::size_t colored, std::size_t used) {
    if (used >= best_ || best_ == lower_) return;
    const std::size_t n = g_.order();
    if (colored == n) {
      best_ = used;
      best_color_ = color_;
      return;
    }
    // DSATUR choice: most distinct neighbor colors, then most uncolored
    // neighbors, then lowest id.
    std::size_t pick = n, best_sat = 0, best_deg = 0;
    std::vector<char> seen(used + 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t sat = 0, deg = 0;
      for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) {
        const int c = color_[static_cast<std::size_t>(u)];
        if (c < 0) {
          ++deg;
        } else if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          ++sat;
        }
      }
      if (pick == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::vector<char> blocked(used + 1, 0);
    for (Vertex u : g_.neighbors(static_cast<Vertex>(pick))) {
      const int c = color_[static_cast<std::size_t>(u)];
      if (c >= 0) blocked[static_cast<std::size_t>(c)] = 1;
    }
    for (std::size_t c = 0; c < used; ++c) {
      if (blocked[c]) continue;
      color_[pick] = static_cast<int>(c);
      search(colored + 1, used);
      if (best_ == lower_) break;
    }
    if (used + 1 < best_ && best_ != lower_) {
      color_[pick] = static_cast<int>(used);
      search(colored + 1, used + 1);
    }
    color_[pick] = -1;
  }

  const Graph& g_;
  std::vector<int> color_;
  std::vector<int> best_color_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
};

}  // namespace

CliqueList maximal_cliques(const Graph& g, std::size_t guard) {
  check_guard("maximal_cliques", g.order(), guard);
  if (g.order() == 0) return {};
  return CliqueEnumerator(g).run();
}

std::size_t clique_number(const Graph& g, std::size_t guard) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g, guard)) best = std::max(best, c.size());
  return best;
}

WeightedSet mis_exact(const Graph& g, std::span<const Weight> weights, std::size_t guard) {
  check_guard("mis_exact", g.order(), guard);
  std::vector<Weight> w;
  if (weights.empty()) {
    w.assign(g.order(), 1);
  } else {
    if (weights.size() != g.order()) throw InputError("mis_exact: weight vector length mismatch");
    w.assign(weights.begin(), weights.end());
    for (auto x : w)
      if (x < 0) throw InputError("mis_exact: weights must be nonnegative");
  }
  return IndependentSetSearch(g, std::move(w)).run();
}

WeightedSet vc_exact(const Graph& g, std::size_t guard) {
  check_guard("vc_exact", g.order(), guard);
  const auto mis = mis_exact(g, {}, guard);
  Bitset cover = g.full_set();
  for (Vertex v : mis.vertices) cover.reset(static_cast<std::size_t>(v));
  WeightedSet out{static_cast<Weight>(g.order()) - mis.value, cover.to_vector()};
  return out;
}

Coloring chromatic_exact(const Graph& g, std::size_t guard) {
  check_guard("chromatic_exact", g.order(), guard);
  return ColoringSearch(g).run();
}

}  // namespace ecg
