#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "ecg/alpha_prime.hpp"
#include "ecg/errors.hpp"
#include "ecg/graph.hpp"
#include "ecg/oracles.hpp"
#include "ecg/parallel.hpp"

namespace ecg {

enum class PruneKind { isolated, pendant, false_twin, true_twin };

const char* prune_kind_name(PruneKind k);

// Elimination of x from the current residual graph. For pendant steps the
// partner is the unique neighbor; for twin steps it is the twin that stays.
struct PruningStep {
  PruneKind kind = PruneKind::isolated;
  Vertex x = -1;
  Vertex partner = -1;

  friend bool operator==(const PruningStep&, const PruningStep&) = default;
};

struct PruningSequence {
  std::size_t vertex_count = 0;
  std::vector<PruningStep> steps;  // in elimination order
  Vertex last = -1;                // the surviving vertex (-1 for the empty graph)
};

struct NotDistanceHereditary {
  VertexSet residual;  // induced subgraph with no isolated, pendant or twin vertex
};

// Greedy elimination, preferring isolated > pendant > false twin > true twin
// and the lowest vertex id within a kind. Succeeds iff G is distance
// hereditary.
std::variant<PruningSequence, NotDistanceHereditary> pruning_sequence(const Graph& g);

class NotDistanceHereditaryError : public InputError {
 public:
  explicit NotDistanceHereditaryError(NotDistanceHereditary w);
  const NotDistanceHereditary& witness() const { return witness_; }

 private:
  NotDistanceHereditary witness_;
};

PruningSequence require_pruning_sequence(const Graph& g);

// Replays the sequence backward from the surviving vertex.
Graph replay(const PruningSequence& seq);

// Maximum-weight independent set by weight transfer along a pruning sequence:
//   isolated x:      answer += w(x)
//   pendant x-y:     answer += w(x); w(y) = max(w(y) - w(x), 0)
//   false twin x,y:  w(y) += w(x)
//   true twin x,y:   w(y) = max(w(x), w(y))
// Throws NotDistanceHereditaryError.
Weight mwis_dh(const Graph& g, std::span<const Weight> w);
WeightedSet mwis_dh_set(const Graph& g, std::span<const Weight> w);
WeightedSet mwis_dh_set(const PruningSequence& seq, std::span<const Weight> w);

std::vector<Weight> d_prime_all_dh(const Graph& g, Execution exec = Execution::parallel);

// alpha'(G) for a distance-hereditary graph: d'(x) from the pruning sequence
// of each neighborhood, then the d'-weighted independent set of G.
AlphaPrimeResult alpha_prime_dh(const Graph& g, Execution exec = Execution::parallel);

}  // namespace ecg
