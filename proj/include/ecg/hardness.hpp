#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

// ---------------------------------------------------------------------------
// 3-CNF formulas

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;
};

// Throws InputError unless every clause has three literals on three distinct
// in-range variables. Repeated variables and complementary pairs inside a
// clause are rejected.
void validate(const CnfFormula& f);

// DIMACS "p cnf L M" with exactly three literals per clause. Comment lines
// start with 'c'; a trailing '%' line is ignored. Throws InputError.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

// Bit v of `assignment` is the value of variable v.
bool satisfies(const CnfFormula& f, std::uint32_t assignment);

// Lowest satisfying assignment by exhaustive search, or nullopt.
std::optional<std::uint32_t> solve_sat_bruteforce(const CnfFormula& f);

// ---------------------------------------------------------------------------
// Independent-edge lift

struct LiftInstance {
  Graph h;
  std::size_t source_edges = 0;
  // Vertex ids: source vertices 0..n-1, then n + 2i and n + 2i + 1 for the
  // simplicial pair of source edge i (lexicographic edge order), then the hub.
  Vertex hub = 0;
  std::vector<std::array<Vertex, 2>> simplicial_pairs;
};

// H = G plus two simplicial vertices on every edge plus a vertex adjacent to
// every vertex of G.
// Claim checked by callers: alpha'(H) = 2m + alpha(G).
LiftInstance lift_alpha_instance(const Graph& g);

struct LiftCheck {
  std::size_t alpha_prime = 0;
  std::size_t expected = 0;      // 2m + alpha(G)
  std::vector<Edge> optimum;     // independent edges of H
  std::size_t source_edges_used = 0;
  bool holds() const { return alpha_prime == expected && source_edges_used == 0; }
};

// Exact alpha'(H) with ties broken toward edges that are not source edges.
// `guard` bounds the edge count of H.
LiftCheck check_lift(const Graph& g, std::size_t guard = 256);

// ---------------------------------------------------------------------------
// 3-SAT to vertex cover on K_e of odd-wheel-free graphs

// The octahedron with inner triangle a0 a1 a2 = 0 1 2 and outer triangle
// b0 b1 b2 = 3 4 5; a_i and b_i are the only non-adjacent pairs.
struct ClauseGadget {
  Graph graph;
  std::array<Vertex, 3> inner{0, 1, 2};
  std::array<Vertex, 3> outer{3, 4, 5};
  // The six inner-outer edges in 6-cycle order of K_e:
  // a0b1 a0b2 a1b2 a1b0 a2b0 a2b1.
  std::array<Edge, 6> f_cycle;
  // Alternate edges of f_cycle; literal k of a clause sits on a_k b_{k+1}.
  std::array<Edge, 3> literal_edges;
};

ClauseGadget build_clause_gadget();

struct ReductionLimits {
  int max_variables = 4;
  int max_clauses = 3;
};

struct VariableRoles {
  std::array<Vertex, 3> triangle{};  // p q r
  Edge positive;                     // p q
  Edge negative;                     // p r
  Edge unlabeled;                    // q r
};

struct ClauseRoles {
  std::array<Vertex, 3> inner{};
  std::array<Vertex, 3> outer{};
  std::array<Edge, 3> literal_edges;  // literal k
  std::array<Edge, 3> links;          // literal k
  std::array<bool, 3> attached{};     // literal k identified at its inner end
};

struct ReductionInstance {
  std::string source;  // DIMACS text of the formula
  int variables = 0;
  int clauses = 0;
  Graph g;
  Graph k;                   // K_e(G) without the stripped vertices
  std::vector<Edge> k_edges; // source edge of every K vertex
  std::vector<Edge> stripped;
  std::size_t threshold = 0;  // L + 8M
  std::vector<VariableRoles> variable_roles;
  std::vector<ClauseRoles> clause_roles;
};

// Occurrence j of variable x (counted over both signs in clause order)
// prefers endpoint j mod 2 of its literal edge, endpoints ordered as stored,
// identified with the inner end of the clause literal edge; a link joins the
// other clause end to the other variable endpoint. Choices are searched
// depth-first over the literals in clause order, each trying (preferred,
// inner), (other, inner), (preferred, outer), (other, outer); every prefix
// of placed literals must keep G odd-wheel-free with no collapsed or shared
// edge. The first complete placement whose stripped vertices are simplicial
// in K_e(G) is returned. Throws InputError on invalid or oversized formulas
// and std::logic_error when no placement works.
ReductionInstance sat_to_vc_instance(const CnfFormula& f, ReductionLimits limits = {});

struct SatDecision {
  bool sat_by_reduction = false;
  bool sat_by_oracle = false;
  std::size_t threshold = 0;
  std::size_t vc_k = 0;       // vc_exact(K)
  std::size_t vc_full = 0;    // vc_exact(K_e(G)) before stripping
  VertexSet cover;            // minimum cover of K
  std::optional<std::uint32_t> assignment;
  bool agree() const { return sat_by_reduction == sat_by_oracle; }
};

// `guard` bounds the vertex count of K_e(G).
SatDecision decide_sat_via_vc(const CnfFormula& f, ReductionLimits limits = {}, std::size_t guard = 128);

}  // namespace ecg
