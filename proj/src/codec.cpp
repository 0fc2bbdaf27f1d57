#include "ecg/codec.hpp"

#include <cctype>

#include <json.hpp>

#include "ecg/errors.hpp"

namespace ecg {
namespace {

constexpr int kOffset = 63;
constexpr std::size_t kMaxGraph6 = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) throw InputError(std::string("graph6: byte out of range: '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6) throw InputError("graph6: n too large for supported headers");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw InputError("graph6: eight-byte headers are not supported");
    if (text.size() < 4) throw InputError("graph6: truncated header");
    n = (static_cast<std::size_t>(sextet(text[1])) << 12) |
        (static_cast<std::size_t>(sextet(text[2])) << 6) | static_cast<std::size_t>(sextet(text[3]));
    if (n < 63) throw InputError("graph6: non-canonical long header");
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t body = text.size() - pos;
  if (body != expected)
    throw InputError("graph6: bit-length mismatch (expected " + std::to_string(expected) +
                     " bytes for n=" + std::to_string(n) + ", got " + std::to_string(body) + ")");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text[pos + k / 6]);
    if (last & ((1 << (6 - k % 6)) - 1)) throw InputError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string to_json_edge_list(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph parse_json_edge_list(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("json edge list: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InputError("json edge list: missing integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 0) throw InputError("json edge list: negative n");
  GraphBuilder b(static_cast<std::size_t>(n));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("json edge list: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("json edge list: each edge must be [u, v]");
      b.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  return std::move(b).build();
}

Graph parse_graph_auto(std::string_view text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_json_edge_list(t);
  return parse_graph6(t);
}

}  // namespace ecg
