#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "ecg/alpha_prime.hpp"
#include "ecg/codec.hpp"
#include "ecg/cograph.hpp"
#include "ecg/cover.hpp"
#include "ecg/dh.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/hardness.hpp"
#include "ecg/mols.hpp"
#include "ecg/random_family.hpp"
#include "ecg/special.hpp"

namespace ecg::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string special;
  std::optional<std::size_t> guard;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string exec = "parallel";

  std::string alpha_class = "auto";
  int rounds = 1;
  int order = 0;
  std::optional<int> count;
  int part_size = 0;
  int parts = 0;
  std::string cover_path;
  int max_variables = ReductionLimits{}.max_variables;
  int max_clauses = ReductionLimits{}.max_clauses;
  std::string family = "cograph";
  int vertices = 0;
  double probability = 0.5;
};

struct Outcome {
  Json report;
  int status = kOk;
};

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const Options& o) {
  if (!o.special.empty() && !o.input.empty()) throw InputError("give either an input file or --special, not both");
  if (!o.special.empty()) return make_special(o.special);
  if (o.input.empty()) throw InputError("no input graph (path, '-' for stdin, or --special)");
  return parse_graph_auto(read_text(o.input));
}

Execution execution(const Options& o) { return o.exec == "serial" ? Execution::serial : Execution::parallel; }

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

Json report(std::string_view command, const std::string& input_digest, std::string_view algorithm, Json value,
            Json certificate) {
  Json r;
  r["schema"] = 1;
  r["command"] = command;
  r["input_digest"] = input_digest;
  r["algorithm"] = algorithm;
  r["value"] = std::move(value);
  r["certificate"] = std::move(certificate);
  return r;
}

Outcome cmd_ke(const Options& o) {
  const auto g = load_graph(o);
  const auto ke = edge_clique_graph(g, execution(o));
  Json cert;
  cert["graph6"] = to_graph6(ke.graph);
  cert["source_edges"] = edges_json(ke.edge_of_vertex);
  auto r = report("ke", digest(to_graph6(g)), "four-endpoint-clique-test", ke.graph.order(), cert);
  r["edges"] = ke.graph.size();
  return {r};
}

Outcome cmd_ke_iterate(const Options& o) {
  if (o.rounds < 0) throw InputError("--rounds must be nonnegative");
  const auto g = load_graph(o);
  const auto guard = o.guard.value_or(kDefaultIterateGuard);
  Graph cur = g;
  Json orders = Json::array({cur.order()});
  for (int i = 0; i < o.rounds; ++i) {
    cur = ke_iterate(cur, 1, guard);
    orders.push_back(cur.order());
  }
  Json cert;
  cert["graph6"] = to_graph6(cur);
  cert["orders"] = orders;
  return {report("ke-iterate", digest(to_graph6(g)), "four-endpoint-clique-test", cur.order(), cert)};
}

Json alpha_certificate(const AlphaPrimeResult& r) {
  Json c;
  c["A"] = r.chosen;
  c["d_prime"] = r.d_prime;
  c["witnesses"] = r.witnesses;
  c["witness_edges"] = edges_json(r.witness_edges);
  return c;
}

Outcome cmd_alpha_prime(const Options& o) {
  const auto g = load_graph(o);
  std::string cls = o.alpha_class;
  if (cls == "auto") {
    if (std::holds_alternative<Cotree>(cotree_decompose(g)))
      cls = "cograph";
    else if (std::holds_alternative<PruningSequence>(pruning_sequence(g)))
      cls = "dh";
    else
      cls = "brute";
  }
  const auto d = digest(to_graph6(g));
  if (cls == "brute") {
    const auto r = alpha_prime_bruteforce(g, o.guard.value_or(kDefaultGuard));
    Json c;
    c["edges"] = edges_json(r.edges);
    return {report("alpha-prime", d, "brute-force", r.value, c)};
  }
  const auto r = cls == "cograph" ? alpha_prime_cograph(g, execution(o)) : alpha_prime_dh(g, execution(o));
  if (const auto bad = check_certificate(g, r)) throw std::logic_error("alpha-prime: certificate rejected: " + *bad);
  return {report("alpha-prime", d, cls == "cograph" ? "cograph-eq0" : "dh-pruning", r.value, alpha_certificate(r))};
}

Json cover_json(const CliqueCover& c) {
  Json j;
  j["kind"] = c.kind == CoverKind::edge ? "edge" : "vertex";
  j["cliques"] = c.cliques;
  return j;
}

Outcome cmd_theta(const Options& o) {
  const auto g = load_graph(o);
  const auto t = theta_e_exact(g, o.budget, o.guard.value_or(kDefaultGuard));
  auto r = report("theta", digest(to_graph6(g)), "maximal-clique-set-cover-branch-and-bound", t.value, cover_json(t.cover));
  r["optimal"] = t.optimal;
  r["lower_bounds"] = {{"gyarfas", t.gyarfas ? Json(*t.gyarfas) : Json()}, {"volume", t.volume}, {"packing", t.packing}};
  r["nodes"] = t.nodes;
  return {r, t.optimal ? kOk : kBudgetExhausted};
}

Outcome cmd_gyarfas(const Options& o) {
  const auto g = load_graph(o);
  const auto b = gyarfas_bound(g);
  Json c;
  c["isolated"] = b.isolated;
  Json pairs = Json::array();
  for (const auto& [x, y] : b.equivalent) pairs.push_back({x, y});
  c["equivalent"] = pairs;
  auto r = report("gyarfas", digest(to_graph6(g)), "ceil-log2-n-plus-1", b.value ? Json(*b.value) : Json(), c);
  r["applicable"] = b.value.has_value();
  r["reason"] = b.reason;
  return {r};
}

Outcome cmd_trivially_perfect(const Options& o) {
  const auto g = load_graph(o);
  const auto t = is_trivially_perfect(g);
  Json c;
  c["witness"] = t.witness;
  c["witness_kind"] = t.trivially_perfect ? Json() : Json(t.witness_is_cycle ? "C4" : "P4");
  return {report("trivially-perfect", digest(to_graph6(g)), "induced-c4-p4-scan", t.trivially_perfect, c)};
}

Json square_json(const LatinSquare& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.order(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.order(); ++j) row.push_back(s.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

Outcome cmd_mols(const Options& o) {
  const int q = o.order;
  const int k = o.count.value_or(mols_order_supported(q) ? q - 1 : 1);
  const auto fam = mols_family(q, k);
  const auto check = check_orthogonal(fam);
  Json c;
  c["squares"] = Json::array();
  for (const auto& s : fam.squares) c["squares"].push_back(square_json(s));
  auto r = report("mols", digest("mols:" + std::to_string(q) + ":" + std::to_string(k)),
                  mols_order_supported(q) ? "finite-field-linear" : "cyclic", fam.squares.size(), c);
  r["order"] = q;
  r["orthogonal"] = check.orthogonal;
  return {r};
}

Outcome cmd_cover_multipartite(const Options& o) {
  const int n = o.part_size, m = o.parts;
  if (n < 1 || m < 3) throw InputError("cover-multipartite: need --n >= 1 and --m >= 3");
  const auto g = complete_multipartite(n, m);
  const auto cover = cover_from_mols(n, m, mols_family(n, m - 2));
  const bool valid = !verify_cover(g, cover) && cliques_edge_disjoint(cover.cliques);
  auto r = report("cover-multipartite", digest(to_graph6(g)), "mols-transversal-cliques", cover.cliques.size(),
                  cover_json(cover));
  r["graph6"] = to_graph6(g);
  r["verified"] = valid;
  return {r, valid ? kOk : kNegative};
}

CliqueCover parse_cover(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("cover: invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("certificate")) j = j["certificate"];
  if (!j.is_object() || !j.contains("cliques") || !j["cliques"].is_array())
    throw InputError("cover: expected an object with a \"cliques\" array");
  CliqueCover c;
  const std::string kind = j.value("kind", "edge");
  if (kind != "edge" && kind != "vertex") throw InputError("cover: kind must be \"edge\" or \"vertex\"");
  c.kind = kind == "edge" ? CoverKind::edge : CoverKind::vertex;
  for (const auto& q : j["cliques"]) {
    if (!q.is_array()) throw InputError("cover: every clique must be an array of vertices");
    VertexSet s;
    for (const auto& v : q) {
      if (!v.is_number_integer()) throw InputError("cover: vertices must be integers");
      s.push_back(v.get<Vertex>());
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    c.cliques.push_back(std::move(s));
  }
  return c;
}

Outcome cmd_verify_cover(const Options& o) {
  if (o.cover_path.empty()) throw InputError("verify-cover: --cover is required");
  const auto g = load_graph(o);
  const auto cover = parse_cover(read_text(o.cover_path));
  const auto bad = verify_cover(g, cover);
  Json c;
  if (bad) {
    c["message"] = bad->message;
    c["clique_index"] = bad->clique_index ? Json(*bad->clique_index) : Json();
    c["uncovered_edge"] = bad->uncovered_edge ? Json({bad->uncovered_edge->u, bad->uncovered_edge->v}) : Json();
    c["uncovered_vertex"] = bad->uncovered_vertex ? Json(*bad->uncovered_vertex) : Json();
  }
  auto r = report("verify-cover", digest(to_graph6(g)), "direct-check", !bad, bad ? c : Json());
  r["size"] = cover.cliques.size();
  r["edge_disjoint"] = cliques_edge_disjoint(cover.cliques);
  return {r, bad ? kNegative : kOk};
}

Outcome cmd_lift_alpha(const Options& o) {
  const auto g = load_graph(o);
  const auto lift = lift_alpha_instance(g);
  const auto check = check_lift(g, o.guard.value_or(256));
  Json c;
  c["graph6"] = to_graph6(lift.h);
  c["hub"] = lift.hub;
  c["optimum"] = edges_json(check.optimum);
  auto r = report("lift-alpha", digest(to_graph6(g)), "weighted-mis-on-ke", check.alpha_prime, c);
  r["expected"] = check.expected;
  r["source_edges_used"] = check.source_edges_used;
  r["holds"] = check.holds();
  return {r, check.holds() ? kOk : kNegative};
}

Outcome cmd_reduce_sat(const Options& o) {
  if (o.input.empty()) throw InputError("reduce-sat: no DIMACS input");
  const auto f = parse_dimacs(read_text(o.input));
  const ReductionLimits limits{o.max_variables, o.max_clauses};
  const auto guard = o.guard.value_or(128);
  const auto inst = sat_to_vc_instance(f, limits);
  const auto d = decide_sat_via_vc(f, limits, guard);
  Json witness;
  if (d.assignment) {
    Json values = Json::array();
    for (int v = 0; v < f.variables; ++v) values.push_back(((*d.assignment >> v) & 1U) != 0);
    witness["assignment"] = values;
  } else {
    witness["assignment"] = nullptr;
  }
  Json cover = Json::array();
  for (Vertex x : d.cover) cover.push_back({inst.k_edges[static_cast<std::size_t>(x)].u, inst.k_edges[static_cast<std::size_t>(x)].v});
  witness["cover"] = cover;
  Json c;
  c["graph6"] = to_graph6(inst.g);
  c["stripped"] = edges_json(inst.stripped);
  auto r = report("reduce-sat", digest(inst.source), "sat-to-vertex-cover", d.sat_by_reduction, c);
  r["formula"] = inst.source;
  r["g_vertices"] = inst.g.order();
  r["g_edges"] = inst.g.size();
  r["k_vertices"] = inst.k.order();
  r["threshold"] = d.threshold;
  r["vc"] = d.vc_k;
  r["vc_unstripped"] = d.vc_full;
  r["sat_reduction"] = d.sat_by_reduction;
  r["sat_oracle"] = d.sat_by_oracle;
  r["agree"] = d.agree();
  r["witness"] = witness;
  return {r, d.agree() ? kOk : kNegative};
}

Outcome cmd_gen(const Options& o) {
  if (o.vertices < 0) throw InputError("gen: --n must be nonnegative");
  const auto family = parse_family(o.family);
  const auto g = random_family(family, o.vertices, o.seed, o.probability);
  Json c;
  c["graph6"] = to_graph6(g);
  c["edges"] = edges_json(g.edges());
  auto r = report("gen", digest(to_graph6(g)), "random-" + std::string(family_name(family)), g.size(), c);
  r["n"] = g.order();
  r["seed"] = o.seed;
  return {r};
}

void print(const Json& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : r.items()) {
    if (key == "certificate" || key == "witness") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Edge-clique graph toolkit", "ecg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--guard", o.guard, "Size guard for exact oracles");
  app.add_option("--budget", o.budget, "Node budget for theta")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for gen")->capture_default_str();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--exec", o.exec, "Kernel execution")->check(CLI::IsMember({"parallel", "serial"}))->capture_default_str();

  std::map<std::string, std::function<Outcome(const Options&)>> handlers;
  const auto graph_command = [&](const std::string& name, const std::string& help, auto handler) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Graph file (graph6 or JSON edge list), '-' for stdin");
    sub->add_option("--special", o.special, "Named graph, e.g. cp:4, cycle:5, multipartite:3,4");
    handlers[name] = handler;
    return sub;
  };

  graph_command("ke", "Edge-clique graph K_e(G)", cmd_ke);
  graph_command("ke-iterate", "Iterated edge-clique graph", cmd_ke_iterate)
      ->add_option("--rounds", o.rounds, "Number of rounds")
      ->capture_default_str();
  graph_command("alpha-prime", "Independence number of K_e(G)", cmd_alpha_prime)
      ->add_option("--class", o.alpha_class, "Algorithm class")
      ->check(CLI::IsMember({"auto", "cograph", "dh", "brute"}))
      ->capture_default_str();
  graph_command("theta", "Exact edge-clique cover number", cmd_theta);
  graph_command("gyarfas", "Gyarfas lower bound", cmd_gyarfas);
  graph_command("trivially-perfect", "Trivially perfect recognition", cmd_trivially_perfect);
  graph_command("lift-alpha", "Independent-edge lift check", cmd_lift_alpha);
  graph_command("verify-cover", "Check a clique cover", cmd_verify_cover)
      ->add_option("--cover", o.cover_path, "Cover JSON file")
      ->required();

  auto* mols = app.add_subcommand("mols", "Mutually orthogonal Latin squares");
  mols->add_option("--order", o.order, "Order q")->required();
  mols->add_option("--count", o.count, "Number of squares");
  handlers["mols"] = cmd_mols;

  auto* multi = app.add_subcommand("cover-multipartite", "Optimal edge-clique cover of K_n^m");
  multi->add_option("--n", o.part_size, "Part size")->required();
  multi->add_option("--m", o.parts, "Number of parts")->required();
  handlers["cover-multipartite"] = cmd_cover_multipartite;

  auto* sat = app.add_subcommand("reduce-sat", "3-SAT to vertex cover reduction");
  sat->add_option("input", o.input, "DIMACS CNF file, '-' for stdin")->required();
  sat->add_option("--max-variables", o.max_variables, "Variable limit")->capture_default_str();
  sat->add_option("--max-clauses", o.max_clauses, "Clause limit")->capture_default_str();
  handlers["reduce-sat"] = cmd_reduce_sat;

  auto* gen = app.add_subcommand("gen", "Random graph families");
  gen->add_option("--family", o.family, "cograph, dh or arbitrary")->capture_default_str();
  gen->add_option("--n", o.vertices, "Vertex count")->required();
  gen->add_option("--p", o.probability, "Edge probability")->capture_default_str();
  handlers["gen"] = cmd_gen;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto name = app.get_subcommands().front()->get_name();
  if (o.guard && *o.guard == 0) {
    err << "error: --guard must be positive\n";
    return kInputError;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    auto outcome = handlers.at(name)(o);
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    outcome.report["timings"] = {{"total_ms", ms.count()}};
    print(outcome.report, o.format, out);
    return outcome.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kConstruction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
}

}  // namespace ecg::cli
