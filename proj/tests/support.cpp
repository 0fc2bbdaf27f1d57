#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "ecg/special.hpp"

namespace ecg::testing {
namespace {

struct Catalog {
  // by_size[n] holds the graphs of one root kind on n vertices.
  std::map<int, std::vector<Named>> connected, disconnected;
};

Named leaf() { return {"v", empty_graph(1)}; }

// Multisets of at least two parts drawn from `pool` whose sizes sum to n,
// combined with `op`.
std::vector<Named> combine(const std::map<int, std::vector<Named>>& pool, int n, Composition op, const char* tag) {
  std::vector<Named> out;
  std::vector<const Named*> parts;
  std::function<void(int, int, int)> rec = [&](int remaining, int min_size, int min_index) {
    if (remaining == 0) {
      if (parts.size() < 2) return;
      std::vector<std::string> names;
      for (auto* p : parts) names.push_back(p->name);
      std::sort(names.begin(), names.end());
      std::string name = std::string(tag) + "(";
      for (std::size_t i = 0; i < names.size(); ++i) name += (i ? "," : "") + names[i];
      name += ")";
      Graph g = parts[0]->graph;
      for (std::size_t i = 1; i < parts.size(); ++i) g = compose(op, g, parts[i]->graph);
      out.push_back({name, std::move(g)});
      return;
    }
    for (int s = min_size; s <= remaining; ++s) {
      const auto it = pool.find(s);
      if (it == pool.end()) continue;
      for (int i = s == min_size ? min_index : 0; i < static_cast<int>(it->second.size()); ++i) {
        parts.push_back(&it->second[static_cast<std::size_t>(i)]);
        rec(remaining - s, s, i);
        parts.pop_back();
      }
    }
  };
  rec(n, 1, 0);
  return out;
}

const Catalog& cograph_catalog(int n) {
  static Catalog cat;
  static int built = 0;
  for (int k = built + 1; k <= n; ++k) {
    if (k == 1) {
      cat.connected[1] = {leaf()};
      cat.disconnected[1] = {leaf()};
    } else {
      // Children of a join are leaves or unions; children of a union are
      // leaves or joins.
      std::map<int, std::vector<Named>> unions, joins;
      for (int s = 1; s < k; ++s) {
        unions[s] = s == 1 ? std::vector<Named>{leaf()} : cat.disconnected[s];
        joins[s] = s == 1 ? std::vector<Named>{leaf()} : cat.connected[s];
      }
      cat.connected[k] = combine(unions, k, Composition::join, "J");
      cat.disconnected[k] = combine(joins, k, Composition::union_, "U");
    }
    built = k;
  }
  return cat;
}

}  // namespace

std::vector<Named> connected_cographs(int n) {
  if (n < 1) return {};
  return cograph_catalog(n).connected.at(n);
}

std::vector<Named> connected_trivially_perfect(int n) {
  // Rooted tree on n nodes -> comparability graph of its ancestor order.
  static std::map<int, std::vector<Named>> trees;
  std::function<const std::vector<Named>&(int)> tree = [&](int k) -> const std::vector<Named>& {
    if (auto it = trees.find(k); it != trees.end()) return it->second;
    std::vector<Named> out;
    if (k == 1) {
      out.push_back({"t()", empty_graph(1)});
    } else {
      std::map<int, std::vector<Named>> pool;
      for (int s = 1; s < k; ++s) pool[s] = tree(s);
      // Forests on k-1 nodes: single trees plus multisets of >= 2 trees.
      std::vector<Named> forests = pool[k - 1];
      for (auto& f : combine(pool, k - 1, Composition::union_, "f")) forests.push_back(std::move(f));
      for (const auto& f : forests) out.push_back({"t(" + f.name + ")", join(empty_graph(1), f.graph)});
    }
    return trees[k] = std::move(out);
  };
  if (n < 1) return {};
  return tree(n);
}

std::vector<CnfFormula> small_formula_corpus() {
  std::vector<CnfFormula> out;
  for (int l = 1; l <= 3; ++l) out.push_back({l, {}});
  const Clause positive{Literal{0, false}, Literal{1, false}, Literal{2, false}};
  out.push_back({3, {positive}});
  std::array<int, 3> order{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Clause c;
      for (std::size_t i = 0; i < 3; ++i) c[i] = Literal{order[i], ((signs >> i) & 1) != 0};
      out.push_back({3, {positive, c}});
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

CnfFormula random_formula(int variables, int clauses, std::mt19937_64& rng) {
  CnfFormula f{variables, {}};
  std::vector<int> vars(static_cast<std::size_t>(variables));
  for (int i = 0; i < variables; ++i) vars[static_cast<std::size_t>(i)] = i;
  std::bernoulli_distribution sign(0.5);
  for (int c = 0; c < clauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause cl;
    for (int i = 0; i < 3; ++i) cl[static_cast<std::size_t>(i)] = Literal{vars[static_cast<std::size_t>(i)], sign(rng)};
    f.clauses.push_back(cl);
  }
  return f;
}

CnfFormula full_unsat_formula() {
  CnfFormula f{3, {}};
  for (int signs = 0; signs < 8; ++signs) {
    Clause c;
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = Literal{i, ((signs >> i) & 1) != 0};
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace ecg::testing
