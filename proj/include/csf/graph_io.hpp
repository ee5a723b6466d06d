#pragma once

// Edge-list files and family specifiers.
//
//   p <numVertices>
//   e <u> <v>        0-based endpoints
//
// Blank lines and lines starting with '#' are ignored.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "csf/graphs.hpp"

namespace csf {

class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int order = -1;
  int lineno = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& why) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      if (order >= 0) fail("duplicate 'p' line");
      if (!(ls >> order) || order < 0) fail("expected vertex count");
    } else if (tag == "e") {
      if (order < 0) fail("'e' before 'p'");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected two endpoints");
      if (u < 0 || v < 0 || u >= order || v >= order) fail("endpoint out of range");
      if (u == v) fail("loop");
      edges.emplace_back(u, v);
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing text");
  }
  if (order < 0) throw ParseError("edge list: missing 'p' line");
  return Graph(order, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

/// "half:m", "hgraph:mxn" or "lattice:mxn".
inline Family parse_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("family spec must look like half:m, hgraph:mxn or lattice:mxn");
  std::string_view kind = spec.substr(0, colon);
  std::string_view args = spec.substr(colon + 1);
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 6) throw ParseError("bad family parameter in '" + std::string(spec) + "'");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("bad family parameter in '" + std::string(spec) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (kind == "half") return {Family::Kind::half, number(args), 0};
  if (kind == "hgraph" || kind == "lattice") {
    auto x = args.find('x');
    if (x == std::string_view::npos) throw ParseError("expected mxn in '" + std::string(spec) + "'");
    return {kind == "hgraph" ? Family::Kind::hgraph : Family::Kind::lattice,
            number(args.substr(0, x)), number(args.substr(x + 1))};
  }
  throw ParseError("unknown family '" + std::string(kind) + "'");
}

inline Graph build_family(const Family& f) {
  switch (f.kind) {
    case Family::Kind::half:
      return half_graph(f.m);
    case Family::Kind::hgraph:
      return h_graph(f.m, f.n);
    case Family::Kind::lattice:
      return product_chain_inc(f.m, f.n);
    case Family::Kind::none:
      break;
  }
  throw PreconditionError("not a built-in family");
}

}  // namespace csf
