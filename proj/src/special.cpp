#include "ecg/special.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "ecg/errors.hpp"

namespace ecg {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto tok = s.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    require(ec == std::errc{} && ptr == tok.data() + tok.size(),
            "special graph: bad integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph cocktail_party(int n) {
  require(n >= 1, "cocktail_party: n must be >= 1");
  GraphBuilder b(static_cast<std::size_t>(2 * n));
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if (u / 2 != v / 2) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "complete_multipartite: part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  GraphBuilder b(part_of.size());
  for (std::size_t u = 0; u < part_of.size(); ++u)
    for (std::size_t v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

Graph complete_multipartite(int part_size, int parts) {
  require(part_size >= 1 && parts >= 1, "complete_multipartite: parameters must be >= 1");
  const std::vector<int> sizes(static_cast<std::size_t>(parts), part_size);
  return complete_multipartite(std::span<const int>(sizes));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete: n must be >= 1");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph path_graph(int n) {
  require(n >= 1, "path: n must be >= 1");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: length must be >= 3");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph wheel_graph(int n) {
  require(n >= 3, "wheel: cycle length must be >= 3");
  GraphBuilder b(static_cast<std::size_t>(n + 1));
  for (int v = 0; v < n; ++v) {
    b.add_edge(v, (v + 1) % n);
    b.add_edge(v, n);
  }
  return std::move(b).build();
}

Graph empty_graph(int n) {
  require(n >= 0, "empty: n must be >= 0");
  return GraphBuilder(static_cast<std::size_t>(n)).build();
}

Graph make_special(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  require(colon != std::string_view::npos, "special graph: expected kind:params, got '" +
                                               std::string(descriptor) + "'");
  const auto kind = descriptor.substr(0, colon);
  const auto p = parse_ints(descriptor.substr(colon + 1));
  auto one = [&]() {
    require(p.size() == 1, "special graph: '" + std::string(kind) + "' takes one parameter");
    return p[0];
  };
  if (kind == "cp" || kind == "cocktail_party") return cocktail_party(one());
  if (kind == "complete") return complete_graph(one());
  if (kind == "path") return path_graph(one());
  if (kind == "cycle") return cycle_graph(one());
  if (kind == "wheel") return wheel_graph(one());
  if (kind == "empty") return empty_graph(one());
  if (kind == "star") {
    const int leaves = one();
    require(leaves >= 0, "star: leaf count must be >= 0");
    return join(complete_graph(1), empty_graph(leaves));
  }
  if (kind == "multipartite" || kind == "complete_multipartite") {
    require(p.size() == 2, "multipartite: expects part_size,parts");
    return complete_multipartite(p[0], p[1]);
  }
  throw InputError("special graph: unknown kind '" + std::string(kind) + "'");
}

Graph compose(Composition op, const Graph& a, const Graph& b) {
  const auto na = static_cast<Vertex>(a.order());
  GraphBuilder out(a.order() + b.order());
  for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) out.add_edge(e.u + na, e.v + na);
  if (op == Composition::join)
    for (Vertex u = 0; u < na; ++u)
      for (Vertex v = 0; v < static_cast<Vertex>(b.order()); ++v) out.add_edge(u, v + na);
  return std::move(out).build();
}

}  // namespace ecg
