#include "graphgen/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace graphgen {

namespace {

[[noreturn]] void parse_fail(const std::string& path, size_t line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

bool parse_id(std::string_view tok, uint64_t& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

}  // namespace

MultiGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": " + std::strerror(errno));

  std::vector<std::pair<uint64_t, uint64_t>> edges;
  uint64_t max_id = 0;
  bool any = false;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    size_t pos = 0;
    std::string_view tok[3];
    int ntok = 0;
    while (pos < s.size()) {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos >= s.size()) break;
      size_t end = pos;
      while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
      if (ntok < 3) tok[ntok] = s.substr(pos, end - pos);
      ++ntok;
      pos = end;
    }
    if (ntok == 0) continue;
    if (ntok != 2) parse_fail(path, lineno, "expected two vertex ids");
    uint64_t u, v;
    if (!parse_id(tok[0], u) || !parse_id(tok[1], v))
      parse_fail(path, lineno, "vertex id is not a non-negative integer");
    if (u >= kInvalidNode || v >= kInvalidNode)
      parse_fail(path, lineno, "vertex id too large");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
    any = true;
  }

  MultiGraph g;
  if (any) g.add_nodes(static_cast<NodeId>(max_id + 1));
  for (auto [u, v] : edges) g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return g;
}

void write_edge_list(const std::string& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": " + std::strerror(errno));
  std::vector<NodeId> remap(g.node_count(), kInvalidNode);
  NodeId next = 0;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.alive(v)) remap[v] = next++;
  for (uint64_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    out << remap[u] << ' ' << remap[v] << '\n';
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

void write_edge_list(const std::string& path, const SimpleGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": " + std::strerror(errno));
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors_of(u))
      if (u < v) out << u << ' ' << v << '\n';
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace graphgen
