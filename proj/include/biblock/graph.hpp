#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biblock/error.hpp"

namespace biblock {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

/// Largest vertex count a Graph accepts; adjacency rows are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/// Immutable simple undirected graph on the labels 0..order()-1.
///
/// Edges are stored normalized (u < v) and sorted. Connectivity is not an
/// invariant: intermediate states of rewrites are assembled edge by edge.
class Graph {
 public:
  Graph() : Graph(1, std::vector<Edge>{}) {}

  Graph(int order, const std::vector<Edge>& pairs) : order_(order) {
    if (order < 1) throw Error(Errc::InvalidSize, "graph needs at least one vertex");
    if (order > kMaxOrder) {
      throw Error(Errc::TooLarge, "graph order " + std::to_string(order) + " exceeds " +
                                      std::to_string(kMaxOrder));
    }
    rows_.assign(static_cast<std::size_t>(order), 0);
    edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
      if (u < 0 || v < 0 || u >= order || v >= order) {
        throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") outside 0.." + std::to_string(order - 1));
      }
      if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
      if (rows_[u] >> v & 1U) {
        throw Error(Errc::DuplicateEdge,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") given twice");
      }
      rows_[u] |= std::uint64_t{1} << v;
      rows_[v] |= std::uint64_t{1} << u;
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    adjacency_.resize(static_cast<std::size_t>(order));
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const {
    return u >= 0 && v >= 0 && u < order_ && v < order_ && (rows_[u] >> v & 1U);
  }
  /// Neighborhood of v as a bit mask.
  std::uint64_t row(Vertex v) const { return rows_.at(v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> rows_;
};

struct Bipartition {
  VertexSet m;
  VertexSet n;
};

/// A graph together with the original label of each of its vertices.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> original;
};

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

inline std::uint64_t mask_of(std::span<const Vertex> vertices) {
  std::uint64_t mask = 0;
  for (Vertex v : vertices) mask |= bit(v);
  return mask;
}

inline VertexSet set_of(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

inline bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

inline Graph from_edge_list(int k, const std::vector<Edge>& pairs) { return Graph(k, pairs); }

/// K_{m,n}: labels 0..m-1 form side M, m..m+n-1 form side N.
inline Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) {
    throw Error(Errc::InvalidSize,
                "complete bipartite sides must be >= 1, got " + std::to_string(m) + "," +
                    std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v) edges.emplace_back(u, v);
  return Graph(m + n, edges);
}

/// Complete bipartite graph between two explicit disjoint label sets of an order-k graph.
inline std::vector<Edge> complete_between(const VertexSet& a, const VertexSet& b) {
  std::vector<Edge> edges;
  edges.reserve(a.size() * b.size());
  for (Vertex u : a)
    for (Vertex v : b) edges.emplace_back(std::min(u, v), std::max(u, v));
  return edges;
}

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

inline Graph delete_edges(const Graph& g, const std::vector<Edge>& pairs) {
  std::uint64_t dropped_rows[kMaxOrder] = {};
  for (auto [u, v] : pairs) {
    if (u == v) throw Error(Errc::SelfLoop, "cannot delete self-loop at " + std::to_string(u));
    if (!g.has_edge(u, v)) {
      throw Error(Errc::MissingEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    }
    dropped_rows[std::min(u, v)] |= bit(std::max(u, v));
  }
  std::vector<Edge> kept;
  kept.reserve(g.size());
  for (auto [u, v] : g.edges())
    if (!(dropped_rows[u] >> v & 1U)) kept.emplace_back(u, v);
  return Graph(g.order(), kept);
}

/// Graph with the same vertex set and edges (E(g) \ removed) ∪ added.
inline Graph edit_edges(const Graph& g, const std::vector<Edge>& removed,
                        const std::vector<Edge>& added) {
  Graph base = removed.empty() ? g : delete_edges(g, removed);
  auto edges = base.edges();
  edges.insert(edges.end(), added.begin(), added.end());
  return Graph(g.order(), edges);
}

inline std::uint64_t component_mask(const Graph& g, Vertex start, std::uint64_t allowed) {
  std::uint64_t seen = bit(start);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Vertex v : set_of(frontier)) next |= g.row(v);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline std::uint64_t all_vertices(const Graph& g) {
  return g.order() == 64 ? ~std::uint64_t{0} : (bit(g.order()) - 1);
}

/// True iff the graph has a single connected component.
inline bool is_connected(const Graph& g) {
  return component_mask(g, 0, all_vertices(g)) == all_vertices(g);
}

/// Two-coloring by breadth-first layering, component by component; nullopt on an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

/// Bipartition of a connected graph; the side containing vertex 0 is M.
inline Bipartition bipartition(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "bipartition needs a connected graph");
  auto color = two_coloring(g);
  if (!color) throw Error(Errc::OddCycle, "graph contains an odd cycle");
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) ((*color)[v] == 0 ? parts.m : parts.n).push_back(v);
  return parts;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Sides of g when g is a connected complete bipartite graph.
inline std::optional<Bipartition> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  auto color = two_coloring(g);
  if (!color) return std::nullopt;
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) ((*color)[v] == 0 ? parts.m : parts.n).push_back(v);
  if (g.size() != parts.m.size() * parts.n.size()) return std::nullopt;
  return parts;
}

inline bool is_complete_bipartite(const Graph& g) {
  return complete_bipartite_parts(g).has_value();
}

/// Induced subgraph on `vertices`, relabeled densely in increasing label order.
inline Relabeled induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.order()) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
    position[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
  return {Graph(static_cast<int>(vertices.size()), edges), vertices};
}

/// g with the given vertices deleted; survivors keep their relative order.
inline Relabeled remove_vertices(const Graph& g, const VertexSet& removed) {
  VertexSet kept;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!contains(removed, v)) kept.push_back(v);
  return induced_subgraph(g, kept);
}

/// Image of g under the permutation `perm` (old label -> new label).
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

inline int min_degree(const Graph& g) {
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline int max_degree(const Graph& g) {
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace biblock
