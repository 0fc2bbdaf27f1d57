#include "ecg/random_family.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ecg/errors.hpp"

namespace ecg {

Family parse_family(std::string_view name) {
  if (name == "cograph") return Family::cograph;
  if (name == "distance_hereditary" || name == "dh") return Family::distance_hereditary;
  if (name == "arbitrary" || name == "gnp") return Family::arbitrary;
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::cograph:
      return "cograph";
    case Family::distance_hereditary:
      return "distance_hereditary";
    case Family::arbitrary:
      return "arbitrary";
  }
  return "?";
}

namespace {

void random_cotree(std::mt19937_64& rng, std::span<const Vertex> ids, GraphBuilder& b) {
  if (ids.size() < 2) return;
  std::uniform_int_distribution<std::size_t> cut(1, ids.size() - 1);
  const std::size_t k = cut(rng);
  const bool join = std::bernoulli_distribution(0.5)(rng);
  const auto left = ids.subspan(0, k);
  const auto right = ids.subspan(k);
  if (join)
    for (Vertex u : left)
      for (Vertex v : right) b.add_edge(u, v);
  random_cotree(rng, left, b);
  random_cotree(rng, right, b);
}

}  // namespace

Graph random_family(Family family, int n, std::uint64_t seed, double edge_probability) {
  if (n < 1) throw InputError("random_family: n must be >= 1");
  std::mt19937_64 rng(seed);
  const auto size = static_cast<std::size_t>(n);
  std::vector<Vertex> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  GraphBuilder b(size);
  switch (family) {
    case Family::cograph:
      random_cotree(rng, perm, b);
      break;
    case Family::distance_hereditary: {
      // Built on ids 0..n-1 in insertion order, then relabeled through perm.
      std::vector<Bitset> rows(size, Bitset(size));
      std::discrete_distribution<int> op({1, 3, 3, 3});
      for (std::size_t v = 1; v < size; ++v) {
        const std::size_t y = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        switch (op(rng)) {
          case 0:
            break;
          case 1:
            rows[v].set(y);
            break;
          case 2:
            rows[v] = rows[y];
            break;
          default:
            rows[v] = rows[y];
            rows[v].set(y);
            break;
        }
        rows[v].for_each([&](std::size_t u) { rows[u].set(v); });
      }
      for (std::size_t u = 0; u < size; ++u)
        rows[u].for_each([&](std::size_t v) {
          if (u < v) b.add_edge(perm[u], perm[v]);
        });
      break;
    }
    case Family::arbitrary: {
      std::bernoulli_distribution coin(edge_probability);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) b.add_edge(u, v);
      break;
    }
  }
  return std::move(b).build();
}

}  // namespace ecg
