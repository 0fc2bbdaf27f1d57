#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/hardness.hpp"

namespace ecg::testing {

struct Named {
  std::string name;
  Graph graph;
};

// All connected cographs on n vertices, one per isomorphism class, named by
// their canonical cotree ("J(...)" join, "U(...)" union, "v" leaf).
std::vector<Named> connected_cographs(int n);

// All connected trivially perfect graphs on n vertices, one per rooted tree.
std::vector<Named> connected_trivially_perfect(int n);

// Every formula over {x1, x2, x3} with M <= 2 clauses on three distinct
// variables, the first clause normalized to x1 x2 x3 by renaming and sign
// flips and the second in every order and sign pattern; plus the empty
// formulas with L = 1..3.
std::vector<CnfFormula> small_formula_corpus();

CnfFormula random_formula(int variables, int clauses, std::mt19937_64& rng);

// All 8 sign patterns over three variables: unsatisfiable.
CnfFormula full_unsat_formula();

}  // namespace ecg::testing
