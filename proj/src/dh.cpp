#include "ecg/dh.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>

namespace ecg {

const char* prune_kind_name(PruneKind k) {
  switch (k) {
    case PruneKind::isolated:
      return "isolated";
    case PruneKind::pendant:
      return "pendant";
    case PruneKind::false_twin:
      return "false_twin";
    case PruneKind::true_twin:
      return "true_twin";
  }
  return "?";
}

NotDistanceHereditaryError::NotDistanceHereditaryError(NotDistanceHereditary w)
    : InputError("graph is not distance hereditary (stuck on a residual of " +
                 std::to_string(w.residual.size()) + " vertices)"),
      witness_(std::move(w)) {}

namespace {

std::optional<PruningStep> next_step(const Graph& g, const Bitset& alive) {
  std::optional<PruningStep> pendant;
  for (std::size_t x = alive.find_first(); x != Bitset::npos; x = alive.find_next(x)) {
    const Bitset nx = g.row(static_cast<Vertex>(x)) & alive;
    const auto d = nx.count();
    if (d == 0) return PruningStep{PruneKind::isolated, static_cast<Vertex>(x), -1};
    if (d == 1 && !pendant)
      pendant = PruningStep{PruneKind::pendant, static_cast<Vertex>(x), static_cast<Vertex>(nx.find_first())};
  }
  if (pendant) return pendant;

  // Twin classes keyed by open (false twins) and closed (true twins)
  // neighborhoods within the residual.
  std::map<Bitset, std::vector<Vertex>> open, closed;
  alive.for_each([&](std::size_t x) {
    Bitset nx = g.row(static_cast<Vertex>(x)) & alive;
    open[nx].push_back(static_cast<Vertex>(x));
    nx.set(x);
    closed[nx].push_back(static_cast<Vertex>(x));
  });
  auto lowest_pair = [](const std::map<Bitset, std::vector<Vertex>>& classes) -> std::optional<std::pair<Vertex, Vertex>> {
    std::optional<std::pair<Vertex, Vertex>> best;
    for (const auto& [key, members] : classes)
      if (members.size() >= 2 && (!best || members[0] < best->first)) best = std::pair{members[0], members[1]};
    return best;
  };
  if (auto p = lowest_pair(open)) return PruningStep{PruneKind::false_twin, p->first, p->second};
  if (auto p = lowest_pair(closed)) return PruningStep{PruneKind::true_twin, p->first, p->second};
  return std::nullopt;
}

}  // namespace

std::variant<PruningSequence, NotDistanceHereditary> pruning_sequence(const Graph& g) {
  PruningSequence seq;
  seq.vertex_count = g.order();
  if (g.order() == 0) return seq;
  Bitset alive = g.full_set();
  while (alive.count() > 1) {
    const auto step = next_step(g, alive);
    if (!step) return NotDistanceHereditary{alive.to_vector()};
    seq.steps.push_back(*step);
    alive.reset(static_cast<std::size_t>(step->x));
  }
  seq.last = static_cast<Vertex>(alive.find_first());
  return seq;
}

PruningSequence require_pruning_sequence(const Graph& g) {
  auto r = pruning_sequence(g);
  if (auto* bad = std::get_if<NotDistanceHereditary>(&r)) throw NotDistanceHereditaryError(std::move(*bad));
  return std::get<PruningSequence>(std::move(r));
}

Graph replay(const PruningSequence& seq) {
  const std::size_t n = seq.vertex_count;
  std::vector<Bitset> rows(n, Bitset(n));
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    const auto x = static_cast<std::size_t>(it->x);
    const auto y = static_cast<std::size_t>(it->partner);
    switch (it->kind) {
      case PruneKind::isolated:
        break;
      case PruneKind::pendant:
        rows[x].set(y);
        break;
      case PruneKind::false_twin:
        rows[x] = rows[y];
        break;
      case PruneKind::true_twin:
        rows[x] = rows[y];
        rows[x].set(y);
        break;
    }
    rows[x].for_each([&](std::size_t u) { rows[u].set(x); });
  }
  return Graph::from_rows(std::move(rows));
}

WeightedSet mwis_dh_set(const PruningSequence& seq, std::span<const Weight> weights) {
  if (weights.size() != seq.vertex_count) throw InputError("mwis_dh: weight vector length mismatch");
  for (auto x : weights)
    if (x < 0) throw InputError("mwis_dh: weights must be nonnegative");
  if (seq.vertex_count == 0) return {};

  std::vector<Weight> w(weights.begin(), weights.end());
  // Weights of x and partner immediately before each step.
  std::vector<std::pair<Weight, Weight>> before;
  before.reserve(seq.steps.size());
  Weight answer = 0;
  for (const auto& s : seq.steps) {
    const auto x = static_cast<std::size_t>(s.x);
    const Weight wy = s.partner >= 0 ? w[static_cast<std::size_t>(s.partner)] : 0;
    before.emplace_back(w[x], wy);
    switch (s.kind) {
      case PruneKind::isolated:
        answer += w[x];
        break;
      case PruneKind::pendant:
        answer += w[x];
        w[static_cast<std::size_t>(s.partner)] = std::max<Weight>(wy - w[x], 0);
        break;
      case PruneKind::false_twin:
        w[static_cast<std::size_t>(s.partner)] = wy + w[x];
        break;
      case PruneKind::true_twin:
        w[static_cast<std::size_t>(s.partner)] = std::max(wy, w[x]);
        break;
    }
  }
  answer += w[static_cast<std::size_t>(seq.last)];

  Bitset chosen(seq.vertex_count);
  if (w[static_cast<std::size_t>(seq.last)] > 0) chosen.set(static_cast<std::size_t>(seq.last));
  for (std::size_t i = seq.steps.size(); i-- > 0;) {
    const auto& s = seq.steps[i];
    const auto x = static_cast<std::size_t>(s.x);
    const auto y = static_cast<std::size_t>(s.partner);
    const auto [wx, wy] = before[i];
    switch (s.kind) {
      case PruneKind::isolated:
        if (wx > 0) chosen.set(x);
        break;
      case PruneKind::pendant:
        if (chosen.test(y) && wy > wx) break;
        chosen.reset(y);
        if (wx > 0) chosen.set(x);
        break;
      case PruneKind::false_twin:
        if (chosen.test(y)) {
          if (wx > 0) chosen.set(x);
          if (wy == 0) chosen.reset(y);
        }
        break;
      case PruneKind::true_twin:
        if (chosen.test(y) && wx > wy) {
          chosen.reset(y);
          chosen.set(x);
        }
        break;
    }
  }
  return {answer, chosen.to_vector()};
}

WeightedSet mwis_dh_set(const Graph& g, std::span<const Weight> w) {
  if (w.size() != g.order()) throw InputError("mwis_dh: weight vector length mismatch");
  return mwis_dh_set(require_pruning_sequence(g), w);
}

Weight mwis_dh(const Graph& g, std::span<const Weight> w) { return mwis_dh_set(g, w).value; }

namespace {

WeightedSet neighborhood_mis(const Graph& g, Vertex x) {
  const auto nbrs = g.neighbors(x);
  if (nbrs.empty()) return {};
  const Graph local = induced_subgraph(g, nbrs);
  const std::vector<Weight> unit(local.order(), 1);
  auto local_set = mwis_dh_set(local, unit);
  for (auto& v : local_set.vertices) v = nbrs[static_cast<std::size_t>(v)];
  return local_set;
}

}  // namespace

std::vector<Weight> d_prime_all_dh(const Graph& g, Execution exec) {
  const auto n = static_cast<long long>(g.order());
  std::vector<Weight> out(g.order(), 0);
  const bool par = exec == Execution::parallel;
  // Exceptions cannot cross the OpenMP region; the first failure is
  // rethrown after the loop.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) if (par)
  for (long long x = 0; x < n; ++x) {
    try {
      out[static_cast<std::size_t>(x)] = neighborhood_mis(g, static_cast<Vertex>(x)).value;
    } catch (...) {
#pragma omp critical(ecg_dh_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

AlphaPrimeResult alpha_prime_dh(const Graph& g, Execution exec) {
  const auto seq = require_pruning_sequence(g);
  AlphaPrimeResult r;
  r.d_prime = d_prime_all_dh(g, exec);
  const auto outer = mwis_dh_set(seq, r.d_prime);
  r.value = static_cast<std::size_t>(outer.value);
  r.chosen = outer.vertices;
  for (Vertex x : r.chosen) r.witnesses.push_back(neighborhood_mis(g, x).vertices);
  r.witness_edges = witness_edges_of(r.chosen, r.witnesses);
  return r;
}

}  // namespace ecg
