#include "ecg/alpha_prime.hpp"

#include <algorithm>

#include "ecg/edge_clique.hpp"

namespace ecg {

std::vector<Edge> witness_edges_of(const VertexSet& chosen, const std::vector<VertexSet>& witnesses) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (Vertex z : witnesses[i]) out.emplace_back(chosen[i], z);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> check_certificate(const Graph& g, const AlphaPrimeResult& r) {
  if (r.d_prime.size() != g.order()) return "d' vector has wrong length";
  if (r.witnesses.size() != r.chosen.size()) return "one witness per chosen vertex required";
  if (!is_independent(g, r.chosen)) return "chosen set A is not independent";
  std::size_t sum = 0;
  for (std::size_t i = 0; i < r.chosen.size(); ++i) {
    const Vertex x = r.chosen[i];
    const auto& w = r.witnesses[i];
    for (Vertex z : w)
      if (!g.adjacent(x, z)) return "witness vertex " + std::to_string(z) + " is not a neighbor of " + std::to_string(x);
    if (!is_independent(g, w)) return "witness of " + std::to_string(x) + " is not independent";
    if (static_cast<Weight>(w.size()) != r.d_prime[static_cast<std::size_t>(x)])
      return "witness of " + std::to_string(x) + " does not match d'";
    sum += w.size();
  }
  if (sum != r.value) return "value does not equal the sum of d' over A";
  if (r.witness_edges != witness_edges_of(r.chosen, r.witnesses)) return "witness edges inconsistent";
  if (!edges_independent(g, r.witness_edges)) return "witness edges are not independent in K_e";
  return std::nullopt;
}

}  // namespace ecg
