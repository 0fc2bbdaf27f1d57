#include "ecg/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/oracles.hpp"
#include "ecg/structure.hpp"

namespace ecg {

void validate(const CnfFormula& f) {
  if (f.variables < 0) throw InputError("cnf: negative variable count");
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& cl = f.clauses[c];
    for (const auto& lit : cl)
      if (lit.variable < 0 || lit.variable >= f.variables)
        throw InputError("cnf: clause " + std::to_string(c + 1) + " uses variable " +
                         std::to_string(lit.variable + 1) + " out of range");
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (cl[static_cast<std::size_t>(i)].variable == cl[static_cast<std::size_t>(j)].variable)
          throw InputError("cnf: clause " + std::to_string(c + 1) + " repeats variable " +
                           std::to_string(cl[static_cast<std::size_t>(i)].variable + 1) +
                           (cl[static_cast<std::size_t>(i)].negated != cl[static_cast<std::size_t>(j)].negated
                                ? " with complementary literals"
                                : ""));
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  bool header = false;
  long declared_clauses = 0;
  std::vector<long> pending;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;
    std::istringstream ls(line);
    if (line[first] == 'p') {
      if (header) throw InputError("dimacs: duplicate problem line");
      std::string p, fmt;
      long vars = -1;
      if (!(ls >> p >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 || declared_clauses < 0)
        throw InputError("dimacs: malformed problem line '" + line + "'");
      f.variables = static_cast<int>(vars);
      header = true;
      continue;
    }
    if (!header) throw InputError("dimacs: clause before problem line");
    std::string tok;
    while (ls >> tok) {
      long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw InputError("dimacs: bad literal '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("dimacs: bad literal '" + tok + "'");
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3)
        throw InputError("dimacs: clause " + std::to_string(f.clauses.size() + 1) + " has " +
                         std::to_string(pending.size()) + " literals, expected 3");
      Clause cl;
      for (std::size_t i = 0; i < 3; ++i) {
        const long v = pending[i] < 0 ? -pending[i] : pending[i];
        if (v > f.variables) throw InputError("dimacs: literal " + std::to_string(pending[i]) + " out of range");
        cl[i] = Literal{static_cast<int>(v - 1), pending[i] < 0};
      }
      f.clauses.push_back(cl);
      pending.clear();
    }
  }
  if (!header) throw InputError("dimacs: missing problem line");
  if (!pending.empty()) throw InputError("dimacs: last clause is not terminated by 0");
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw InputError("dimacs: declared " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  validate(f);
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) {
    for (const auto& lit : cl) out << (lit.negated ? "-" : "") << lit.variable + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const CnfFormula& f, std::uint32_t assignment) {
  for (const auto& cl : f.clauses) {
    bool ok = false;
    for (const auto& lit : cl) ok = ok || (((assignment >> lit.variable) & 1U) != 0) != lit.negated;
    if (!ok) return false;
  }
  return true;
}

std::optional<std::uint32_t> solve_sat_bruteforce(const CnfFormula& f) {
  if (f.variables > 24) throw InputError("cnf: exhaustive search limited to 24 variables");
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.variables); ++a)
    if (satisfies(f, a)) return a;
  return std::nullopt;
}

LiftInstance lift_alpha_instance(const Graph& g) {
  const auto edges = g.edges();
  const auto n = static_cast<Vertex>(g.order());
  const auto m = static_cast<Vertex>(edges.size());
  LiftInstance out;
  out.source_edges = edges.size();
  out.hub = n + 2 * m;
  GraphBuilder b(static_cast<std::size_t>(out.hub) + 1);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  for (Vertex i = 0; i < m; ++i) {
    const auto& e = edges[static_cast<std::size_t>(i)];
    const std::array<Vertex, 2> pair{n + 2 * i, n + 2 * i + 1};
    for (Vertex s : pair) {
      b.add_edge(s, e.u);
      b.add_edge(s, e.v);
    }
    out.simplicial_pairs.push_back(pair);
  }
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, out.hub);
  out.h = std::move(b).build();
  return out;
}

LiftCheck check_lift(const Graph& g, std::size_t guard) {
  const auto lift = lift_alpha_instance(g);
  check_guard("check_lift", lift.h.size(), guard);
  const auto ke = edge_clique_graph(lift.h);
  const auto n = static_cast<Vertex>(g.order());
  const auto mh = static_cast<Weight>(lift.h.size());
  // Cardinality dominates; each non-source edge adds a unit tie-break.
  std::vector<Weight> w(ke.edge_of_vertex.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& e = ke.edge_of_vertex[i];
    const bool source = e.u < n && e.v < n;
    w[i] = (mh + 1) + (source ? 0 : 1);
  }
  const auto best = mis_exact(ke.graph, w, guard);

  LiftCheck out;
  out.alpha_prime = static_cast<std::size_t>(best.value / (mh + 1));
  for (Vertex x : best.vertices) {
    const auto& e = ke.edge_of_vertex[static_cast<std::size_t>(x)];
    out.optimum.push_back(e);
    if (e.u < n && e.v < n) ++out.source_edges_used;
  }
  std::sort(out.optimum.begin(), out.optimum.end());
  out.expected = 2 * g.size() + mis_exact(g, {}, guard).vertices.size();
  return out;
}

ClauseGadget build_clause_gadget() {
  ClauseGadget h;
  GraphBuilder b(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v != u + 3) b.add_edge(u, v);
  h.graph = std::move(b).build();
  const auto a = [](int i) { return i % 3; };
  const auto o = [](int i) { return 3 + i % 3; };
  h.f_cycle = {Edge(a(0), o(1)), Edge(a(0), o(2)), Edge(a(1), o(2)),
               Edge(a(1), o(0)), Edge(a(2), o(0)), Edge(a(2), o(1))};
  for (int k = 0; k < 3; ++k) h.literal_edges[static_cast<std::size_t>(k)] = Edge(a(k), o(k + 1));
  return h;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller id becomes the representative.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// One literal occurrence: the variable endpoint identified with the clause
// gadget, the other variable endpoint, and which end of the literal edge
// (inner or outer) takes the identification.
struct Placement {
  std::size_t here = 0;
  std::size_t there = 0;
  bool outer = false;
};

struct Assembly {
  Graph g;
  std::vector<Vertex> id;  // raw vertex to final vertex
  std::vector<std::pair<std::size_t, std::size_t>> raw_edges;
  bool collapsed = false;
};

// Literals beyond the first `literals` (in clause order) are left unplaced:
// their gadget ends stay separate and they get no link.
Assembly assemble(int L, const ClauseGadget& gadget, const std::vector<std::array<Placement, 3>>& placed,
                  std::size_t literals) {
  const auto clauses = placed.size();
  const auto raw_count = static_cast<std::size_t>(3 * L) + 6 * clauses;
  const auto var_vertex = [](int v, int i) { return static_cast<std::size_t>(3 * v + i); };
  const auto gadget_vertex = [L](std::size_t c, Vertex local) {
    return static_cast<std::size_t>(3 * L) + 6 * c + static_cast<std::size_t>(local);
  };

  Assembly a;
  for (int v = 0; v < L; ++v) {
    a.raw_edges.emplace_back(var_vertex(v, 0), var_vertex(v, 1));
    a.raw_edges.emplace_back(var_vertex(v, 0), var_vertex(v, 2));
    a.raw_edges.emplace_back(var_vertex(v, 1), var_vertex(v, 2));
  }
  DisjointSets sets(raw_count);
  for (std::size_t c = 0; c < clauses; ++c) {
    for (const auto& e : gadget.graph.edges()) a.raw_edges.emplace_back(gadget_vertex(c, e.u), gadget_vertex(c, e.v));
    for (std::size_t k = 0; k < 3 && 3 * c + k < literals; ++k) {
      const auto& p = placed[c][k];
      const auto& lit_edge = gadget.literal_edges[k];
      const Vertex joined = p.outer ? lit_edge.v : lit_edge.u;
      const Vertex linked = p.outer ? lit_edge.u : lit_edge.v;
      sets.unite(gadget_vertex(c, joined), p.here);
      a.raw_edges.emplace_back(gadget_vertex(c, linked), p.there);
    }
  }

  a.id.assign(raw_count, -1);
  Vertex next = 0;
  for (std::size_t x = 0; x < raw_count; ++x)
    if (sets.find(x) == x) a.id[x] = next++;
  for (std::size_t x = 0; x < raw_count; ++x) a.id[x] = a.id[sets.find(x)];

  GraphBuilder b(static_cast<std::size_t>(next));
  for (const auto& [u, v] : a.raw_edges) {
    if (a.id[u] == a.id[v]) {
      a.collapsed = true;
      continue;
    }
    b.add_edge(a.id[u], a.id[v]);
  }
  a.g = std::move(b).build();
  if (a.g.size() != a.raw_edges.size()) a.collapsed = true;
  return a;
}

std::vector<Edge> stripped_edges(const Assembly& a, int L, const ClauseGadget& gadget,
                                 const std::vector<std::array<Placement, 3>>& placed) {
  std::vector<Edge> out;
  for (int v = 0; v < L; ++v)
    out.emplace_back(a.id[static_cast<std::size_t>(3 * v + 1)], a.id[static_cast<std::size_t>(3 * v + 2)]);
  for (std::size_t c = 0; c < placed.size(); ++c)
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& lit_edge = gadget.literal_edges[k];
      const Vertex linked = placed[c][k].outer ? lit_edge.u : lit_edge.v;
      out.emplace_back(a.id[static_cast<std::size_t>(3 * L) + 6 * c + static_cast<std::size_t>(linked)],
                       a.id[placed[c][k].there]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool strippable(const Graph& g, const std::vector<Edge>& stripped) {
  const auto ke = edge_clique_graph(g);
  for (const auto& e : stripped) {
    const auto x = ke.vertex_of(e);
    if (!x || !is_simplicial(ke.graph, *x)) return false;
  }
  return true;
}

constexpr std::size_t kPlacementBudget = 1U << 18;

}  // namespace

ReductionInstance sat_to_vc_instance(const CnfFormula& f, ReductionLimits limits) {
  validate(f);
  if (f.variables > limits.max_variables || static_cast<int>(f.clauses.size()) > limits.max_clauses)
    throw InputError("reduce-sat: formula exceeds desk-scale limits (" + std::to_string(f.variables) + " variables, " +
                     std::to_string(f.clauses.size()) + " clauses; limits " + std::to_string(limits.max_variables) +
                     ", " + std::to_string(limits.max_clauses) + ")");

  const int L = f.variables;
  const auto M = f.clauses.size();
  const ClauseGadget gadget = build_clause_gadget();

  // Candidate placements per literal occurrence, preferred first.
  std::vector<std::array<std::array<Placement, 4>, 3>> options(M);
  std::vector<int> occurrences(static_cast<std::size_t>(L), 0);
  for (std::size_t c = 0; c < M; ++c)
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& lit = f.clauses[c][k];
      const std::array<std::size_t, 2> ends{static_cast<std::size_t>(3 * lit.variable),
                                            static_cast<std::size_t>(3 * lit.variable + (lit.negated ? 2 : 1))};
      const auto j = static_cast<std::size_t>(occurrences[static_cast<std::size_t>(lit.variable)]++ % 2);
      options[c][k] = {Placement{ends[j], ends[1 - j], false}, Placement{ends[1 - j], ends[j], false},
                       Placement{ends[j], ends[1 - j], true}, Placement{ends[1 - j], ends[j], true}};
    }

  std::vector<std::array<Placement, 3>> placed;
  std::size_t tried = 0;
  std::optional<Assembly> found;
  const auto search = [&](const auto& self, std::size_t literal) -> bool {
    if (literal == 3 * M) {
      auto a = assemble(L, gadget, placed, literal);
      if (!strippable(a.g, stripped_edges(a, L, gadget, placed))) return false;
      found = std::move(a);
      return true;
    }
    const std::size_t c = literal / 3, k = literal % 3;
    placed.resize(c + 1);
    for (const auto& option : options[c][k]) {
      if (++tried > kPlacementBudget)
        throw std::logic_error("reduce-sat: no odd-wheel-free placement found within " +
                               std::to_string(kPlacementBudget) + " trials");
      placed[c][k] = option;
      const auto a = assemble(L, gadget, placed, literal + 1);
      if (!a.collapsed && !find_odd_wheel(a.g) && self(self, literal + 1)) return true;
    }
    placed.resize(c + (k == 0 ? 0 : 1));
    return false;
  };
  if (!search(search, 0)) throw std::logic_error("reduce-sat: every placement yields an odd wheel or a collapsed edge");
  const Assembly& a = *found;

  ReductionInstance out;
  out.source = to_dimacs(f);
  out.variables = L;
  out.clauses = static_cast<int>(M);
  out.g = a.g;
  out.threshold = static_cast<std::size_t>(L) + 8 * M;

  for (int v = 0; v < L; ++v) {
    VariableRoles r;
    for (int i = 0; i < 3; ++i) r.triangle[static_cast<std::size_t>(i)] = a.id[static_cast<std::size_t>(3 * v + i)];
    r.positive = Edge(r.triangle[0], r.triangle[1]);
    r.negative = Edge(r.triangle[0], r.triangle[2]);
    r.unlabeled = Edge(r.triangle[1], r.triangle[2]);
    out.variable_roles.push_back(r);
  }
  for (std::size_t c = 0; c < M; ++c) {
    const auto base = static_cast<std::size_t>(3 * L) + 6 * c;
    ClauseRoles r;
    for (std::size_t i = 0; i < 3; ++i) {
      r.inner[i] = a.id[base + static_cast<std::size_t>(gadget.inner[i])];
      r.outer[i] = a.id[base + static_cast<std::size_t>(gadget.outer[i])];
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& lit_edge = gadget.literal_edges[k];
      const Vertex linked = placed[c][k].outer ? lit_edge.u : lit_edge.v;
      r.literal_edges[k] = Edge(a.id[base + static_cast<std::size_t>(lit_edge.u)], a.id[base + static_cast<std::size_t>(lit_edge.v)]);
      r.links[k] = Edge(a.id[base + static_cast<std::size_t>(linked)], a.id[placed[c][k].there]);
      r.attached[k] = !placed[c][k].outer;
    }
    out.clause_roles.push_back(r);
  }
  out.stripped = stripped_edges(a, L, gadget, placed);

  const auto expected_edges = static_cast<std::size_t>(3 * L) + 15 * M;
  if (out.g.size() != expected_edges)
    throw std::logic_error("reduce-sat: built " + std::to_string(out.g.size()) + " edges, expected " +
                           std::to_string(expected_edges));

  const auto ke = edge_clique_graph(out.g);
  Bitset keep = ke.graph.full_set();
  for (const auto& e : out.stripped) keep.reset(static_cast<std::size_t>(*ke.vertex_of(e)));
  const auto kept = keep.to_vector();
  out.k = induced_subgraph(ke.graph, kept);
  for (Vertex x : kept) out.k_edges.push_back(ke.edge_of_vertex[static_cast<std::size_t>(x)]);
  return out;
}


SatDecision decide_sat_via_vc(const CnfFormula& f, ReductionLimits limits, std::size_t guard) {
  const auto inst = sat_to_vc_instance(f, limits);
  check_guard("decide_sat_via_vc", inst.g.size(), guard);
  SatDecision d;
  d.threshold = inst.threshold;
  const auto cover = vc_exact(inst.k, guard);
  d.vc_k = cover.vertices.size();
  d.cover = cover.vertices;
  d.vc_full = vc_exact(edge_clique_graph(inst.g).graph, guard).vertices.size();
  d.sat_by_reduction = d.vc_k <= d.threshold;
  d.assignment = solve_sat_bruteforce(f);
  d.sat_by_oracle = d.assignment.has_value();
  return d;
}

}  // namespace ecg
