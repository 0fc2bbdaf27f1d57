#pragma once

#include <cstdint>
#include <string_view>

#include "ecg/graph.hpp"

namespace ecg {

enum class Family { cograph, distance_hereditary, arbitrary };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

// Deterministic for a fixed (family, n, seed, edge_probability).
//  cograph: random binary join/union tree over a shuffled vertex order.
//  distance_hereditary: random one-vertex extensions (isolated, pendant,
//    false twin, true twin) followed by a random relabeling.
//  arbitrary: G(n, p) with p = edge_probability.
Graph random_family(Family family, int n, std::uint64_t seed, double edge_probability = 0.5);

}  // namespace ecg
