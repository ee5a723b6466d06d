#pragma once

// Finite simple graphs on at most 64 vertices with bitset adjacency, stable
// set machinery, and constructors for half graphs, the lattice graphs H_m^n
// and the incomparability graphs of products of two chains.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/core.hpp"

namespace csf {

using VertexSet = std::uint64_t;
inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (bit(n) - 1);
}
inline int popcount(VertexSet s) noexcept { return std::popcount(s); }
inline int lowest(VertexSet s) noexcept { return std::countr_zero(s); }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

/// Grid coordinate (i, j) of vertex v_ij in a product of chains.
struct GridLabel {
  int i = 0;
  int j = 0;
  friend bool operator==(const GridLabel&, const GridLabel&) = default;
  friend auto operator<=>(const GridLabel&, const GridLabel&) = default;
};

/// Which built-in family a graph was constructed as, if any. Lets callers
/// reach closed-form counts.
struct Family {
  enum class Kind { none, half, hgraph, lattice };
  Kind kind = Kind::none;
  int m = 0;
  int n = 0;
  friend bool operator==(const Family&, const Family&) = default;
};

std::string to_string(const Family& f);

inline int family_order(const Family& f) {
  switch (f.kind) {
    case Family::Kind::half:
      return 2 * f.m;
    case Family::Kind::hgraph:
      return f.m * f.n - 2;
    case Family::Kind::lattice:
      return f.m * f.n;
    case Family::Kind::none:
      break;
  }
  return -1;
}

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; loops and out-of-range endpoints are
  /// rejected, repeated edges collapse.
  Graph(int order, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {})
      : order_(order), adj_(static_cast<std::size_t>(order), 0), labels_(std::move(labels)) {
    if (order < 0 || order > kMaxOrder)
      throw PreconditionError("graph order must lie in [0, " + std::to_string(kMaxOrder) + "]");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order)
        throw PreconditionError("edge endpoint out of range");
      if (u == v) throw PreconditionError("loops are not allowed");
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != order)
        throw PreconditionError("one label per vertex required");
      std::map<std::string, int> seen;
      for (int v = 0; v < order; ++v)
        if (!seen.emplace(labels_[static_cast<std::size_t>(v)], v).second)
          throw PreconditionError("vertex labels must be distinct");
    }
  }

  int order() const noexcept { return order_; }
  VertexSet vertices() const noexcept { return all_vertices(order_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Vertices other than v that are not adjacent to v.
  VertexSet non_neighbors(int v) const { return vertices() & ~adj_[static_cast<std::size_t>(v)] & ~bit(v); }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }

  int edge_count() const {
    int e = 0;
    for (auto a : adj_) e += popcount(a);
    return e / 2;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
      for (int v : members(neighbors(u) & ~all_vertices(u + 1))) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
  }
  std::optional<int> find_label(const std::string& name) const {
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
      if (labels_[static_cast<std::size_t>(v)] == name) return v;
    return std::nullopt;
  }

  const std::vector<GridLabel>& grid() const noexcept { return grid_; }
  std::optional<int> vertex_at(int i, int j) const {
    for (int v = 0; v < static_cast<int>(grid_.size()); ++v)
      if (grid_[static_cast<std::size_t>(v)] == GridLabel{i, j}) return v;
    return std::nullopt;
  }

  const Family& family() const noexcept { return family_; }

  /// Copy of the graph with vertex v renamed perm[v]. Drops family tags.
  Graph relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges())
      es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(order_, es);
  }

  friend bool same_edges(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  friend Graph half_graph(int);
  friend Graph h_graph(int, int);
  friend Graph product_chain_inc(int, int);

  int order_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
  std::vector<GridLabel> grid_;
  Family family_;
};

inline std::string to_string(const Family& f) {
  switch (f.kind) {
    case Family::Kind::half:
      return "half:" + std::to_string(f.m);
    case Family::Kind::hgraph:
      return "hgraph:" + std::to_string(f.m) + "x" + std::to_string(f.n);
    case Family::Kind::lattice:
      return "lattice:" + std::to_string(f.m) + "x" + std::to_string(f.n);
    case Family::Kind::none:
      break;
  }
  return "graph";
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

inline Graph edgeless_graph(int n) { return Graph(n, {}); }

/// Half graph G_m: x_1..x_m (indices 0..m-1), y_1..y_m (indices m..2m-1),
/// edges x_i y_j for i <= j.
inline Graph half_graph(int m) {
  if (m < 1) throw PreconditionError("half_graph: m must be positive");
  if (2 * m > kMaxOrder) throw PreconditionError("half_graph: order exceeds 64");
  std::vector<std::pair<int, int>> es;
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (int j = 1; j <= m; ++j) labels.push_back("y" + std::to_string(j));
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) es.emplace_back(i - 1, m + j - 1);
  Graph g(2 * m, es, std::move(labels));
  g.family_ = {Family::Kind::half, m, 0};
  return g;
}

namespace detail {

// Names used for grid vertices: for n = 2 the half-graph names
// (v_k1 = x_{k+1}, v_k0 = y_k), for n = 3 the x/y/z names (v_k2 = x_k,
// v_k1 = y_k, v_k0 = z_k), otherwise v(i,j).
inline std::string grid_name(int i, int j, int m, int n) {
  if (n == 2 && !(i == 0 && j == 0) && !(i == m - 1 && j == 1))
    return j == 1 ? "x" + std::to_string(i + 1) : "y" + std::to_string(i);
  if (n == 3 && !(i == 0 && j == 0) && !(i == m - 1 && j == 2))
    return std::string(1, "zyx"[j]) + std::to_string(i);
  if (n <= 3 && i == 0 && j == 0) return "min";
  if (n <= 3 && i == m - 1 && j == n - 1) return "max";
  return "v(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

inline void build_grid(int m, int n, bool keep_corners, std::vector<GridLabel>& grid,
                       std::vector<std::string>& labels,
                       std::vector<std::pair<int, int>>& edges) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      bool corner = (i == 0 && j == 0) || (i == m - 1 && j == n - 1);
      if (corner && !keep_corners) continue;
      grid.push_back({i, j});
      labels.push_back(grid_name(i, j, m, n));
    }
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b)
      if ((grid[a].i - grid[b].i) * (grid[a].j - grid[b].j) < 0)
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
}

}  // namespace detail

/// H_m^n: inc(m x n) without its two isolated corners v_00 and
/// v_(m-1)(n-1). Vertices are the remaining grid points in row-major order.
inline Graph h_graph(int m, int n) {
  if (m < 2 || n < 2) throw PreconditionError("h_graph: m and n must be at least 2");
  if (m * n - 2 > kMaxOrder) throw PreconditionError("h_graph: order exceeds 64");
  std::vector<GridLabel> grid;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> es;
  detail::build_grid(m, n, false, grid, labels, es);
  Graph g(static_cast<int>(grid.size()), es, std::move(labels));
  g.grid_ = std::move(grid);
  g.family_ = {Family::Kind::hgraph, m, n};
  return g;
}

/// Incomparability graph of the lattice m x n on all mn grid points.
inline Graph product_chain_inc(int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("product_chain_inc: m and n must be positive");
  if (m * n > kMaxOrder) throw PreconditionError("product_chain_inc: order exceeds 64");
  std::vector<GridLabel> grid;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> es;
  detail::build_grid(m, n, true, grid, labels, es);
  Graph g(static_cast<int>(grid.size()), es, std::move(labels));
  g.grid_ = std::move(grid);
  g.family_ = {Family::Kind::lattice, m, n};
  return g;
}

inline bool is_stable(const Graph& g, VertexSet s) {
  for (VertexSet t = s; t; t &= t - 1)
    if (g.neighbors(lowest(t)) & s) return false;
  return true;
}

/// Largest stable set size, by branch and bound over candidate bitsets.
inline int independence_number(const Graph& g, VertexSet within) {
  int best = 0;
  auto rec = [&](auto&& self, VertexSet cand, int size) -> void {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + popcount(cand) <= best) return;
    int v = lowest(cand);
    VertexSet rest = cand & ~bit(v);
    self(self, rest & ~g.neighbors(v), size + 1);
    // v excluded: only worth it if some neighbor of v is a candidate
    if (rest & g.neighbors(v)) self(self, rest, size);
  };
  rec(rec, within & g.vertices(), 0);
  return best;
}
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

/// Calls visit(S) for every stable set S of size k inside `within`, in
/// lexicographic order of sorted vertex indices.
template <class Visit>
void for_each_stable_set(const Graph& g, int k, VertexSet within, Visit&& visit) {
  if (k < 0) return;
  auto rec = [&](auto&& self, VertexSet chosen, VertexSet cand, int need) -> void {
    if (need == 0) {
      visit(chosen);
      return;
    }
    while (cand && popcount(cand) >= need) {
      int v = lowest(cand);
      cand &= ~bit(v);
      self(self, chosen | bit(v), cand & ~g.neighbors(v), need - 1);
    }
  };
  rec(rec, 0, within & g.vertices(), k);
}

inline std::vector<VertexSet> stable_sets_of_size(const Graph& g, int k) {
  if (k < 0 || k > g.order()) throw PreconditionError("stable_sets_of_size: k out of range");
  std::vector<VertexSet> out;
  for_each_stable_set(g, k, g.vertices(), [&](VertexSet s) { out.push_back(s); });
  return out;
}

/// The clique partition Delta_1 .. Delta_{m+n-3} of H_m^n, where
/// Delta_k = { v_ij : i + j = k }.
inline std::vector<VertexSet> clique_cover_h(const Graph& h) {
  if (h.family().kind != Family::Kind::hgraph)
    throw PreconditionError("clique_cover_h: graph was not built by h_graph");
  const int m = h.family().m, n = h.family().n;
  std::vector<VertexSet> blocks(static_cast<std::size_t>(m + n - 3), 0);
  for (int v = 0; v < h.order(); ++v) {
    auto [i, j] = h.grid()[static_cast<std::size_t>(v)];
    blocks[static_cast<std::size_t>(i + j - 1)] |= bit(v);
  }
  return blocks;
}
inline std::vector<VertexSet> clique_cover_h(int m, int n) { return clique_cover_h(h_graph(m, n)); }

/// The involution v_ij -> v_(m-1-i)(n-1-j) of a grid-labelled graph, as a
/// vertex permutation.
inline std::vector<int> grid_involution(const Graph& g) {
  if (g.grid().empty()) throw PreconditionError("grid_involution: graph has no grid labels");
  const int m = g.family().m, n = g.family().n;
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto [i, j] = g.grid()[static_cast<std::size_t>(v)];
    perm[static_cast<std::size_t>(v)] = *g.vertex_at(m - 1 - i, n - 1 - j);
  }
  return perm;
}

}  // namespace csf
