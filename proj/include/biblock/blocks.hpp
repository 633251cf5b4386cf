#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "biblock/graph.hpp"

namespace biblock {

/// A block: maximal 2-connected subgraph or a bridge.
struct Block {
  VertexSet vertices;
  std::vector<Edge> edges;
  /// Present iff the block is complete bipartite; `m` holds the block's smallest label.
  std::optional<Bipartition> parts;
};

struct BlockAdjacency {
  int first;
  int second;
  Vertex via;
};

struct BlockCutTree {
  std::vector<Block> blocks;
  VertexSet cut_vertices;
  /// incidence[v]: ids of the blocks containing v.
  std::vector<std::vector<int>> incidence;
  std::vector<BlockAdjacency> block_adjacency;

  bool is_cut_vertex(Vertex v) const { return incidence.at(v).size() >= 2; }
  int cut_count(int block) const {
    int count = 0;
    for (Vertex v : blocks.at(block).vertices) count += is_cut_vertex(v) ? 1 : 0;
    return count;
  }
};

namespace detail {

inline std::optional<Bipartition> complete_parts(const VertexSet& vertices,
                                                 const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> local(vertices.size());
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  for (auto [u, v] : edges) {
    local[index(u)].push_back(static_cast<Vertex>(index(v)));
    local[index(v)].push_back(static_cast<Vertex>(index(u)));
  }
  std::vector<int> color(vertices.size(), -1);
  std::vector<std::size_t> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (Vertex w : local[u]) {
      if (color[w] == -1) {
        color[w] = 1 - color[u];
        stack.push_back(static_cast<std::size_t>(w));
      } else if (color[w] == color[u]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    (color[i] == 0 ? parts.m : parts.n).push_back(vertices[i]);
  if (edges.size() != parts.m.size() * parts.n.size()) return std::nullopt;
  return parts;
}

}  // namespace detail

/// Biconnected components via the lowpoint traversal, plus the block/cut-vertex incidence.
inline BlockCutTree decompose(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "decompose needs a connected graph");
  const int k = g.order();
  std::vector<int> disc(static_cast<std::size_t>(k), -1);
  std::vector<int> low(static_cast<std::size_t>(k), 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> components;
  int timer = 0;

  std::function<void(Vertex, Vertex)> visit = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] == -1) {
        stack.emplace_back(u, w);
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Edge> component;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            component.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            if (e == Edge{u, w}) break;
          }
          components.push_back(std::move(component));
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  visit(0, -1);

  BlockCutTree tree;
  for (auto& edges : components) {
    Block block;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
      block.vertices.push_back(u);
      block.vertices.push_back(v);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    block.edges = std::move(edges);
    block.parts = detail::complete_parts(block.vertices, block.edges);
    tree.blocks.push_back(std::move(block));
  }
  std::sort(tree.blocks.begin(), tree.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  tree.incidence.resize(static_cast<std::size_t>(k));
  for (int b = 0; b < static_cast<int>(tree.blocks.size()); ++b)
    for (Vertex v : tree.blocks[b].vertices) tree.incidence[v].push_back(b);
  for (Vertex v = 0; v < k; ++v) {
    const auto& ids = tree.incidence[v];
    if (ids.size() < 2) continue;
    tree.cut_vertices.push_back(v);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        tree.block_adjacency.push_back({ids[i], ids[j], v});
  }
  return tree;
}

/// Connected, at least two vertices, and every block complete bipartite.
inline bool is_bi_block(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  auto tree = decompose(g);
  return std::all_of(tree.blocks.begin(), tree.blocks.end(),
                     [](const Block& b) { return b.parts.has_value(); });
}

inline int block_index(const BlockCutTree& t, Vertex v) {
  if (v < 0 || v >= static_cast<int>(t.incidence.size()))
    throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
  return static_cast<int>(t.incidence[v].size());
}

/// Blocks holding at most one cut vertex (the single block when there is only one).
inline std::vector<int> leaf_blocks(const BlockCutTree& t) {
  std::vector<int> leaves;
  for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
    if (t.cut_count(b) <= 1) leaves.push_back(b);
  return leaves;
}

inline std::optional<Vertex> shared_vertex(const BlockCutTree& t, int f, int h) {
  if (f == h) return std::nullopt;
  const auto& a = t.blocks.at(f).vertices;
  const auto& b = t.blocks.at(h).vertices;
  VertexSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return common.front();
}

/// Induced subgraph on the union of two neighboring blocks.
inline Relabeled neighbor_union(const Graph& g, const BlockCutTree& t, int f, int h) {
  if (!shared_vertex(t, f, h)) {
    throw Error(Errc::NotNeighbors, "blocks " + std::to_string(f) + " and " + std::to_string(h) +
                                        " share no cut vertex");
  }
  VertexSet vertices;
  const auto& a = t.blocks[f].vertices;
  const auto& b = t.blocks[h].vertices;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(vertices));
  return induced_subgraph(g, vertices);
}

/// Deletes a leaf block except its cut vertex; labels are compacted in order.
inline Relabeled peel_leaf_block(const Graph& g, const BlockCutTree& t, int h) {
  if (t.blocks.size() < 2) throw Error(Errc::SingleBlock, "cannot peel the only block");
  if (t.cut_count(h) != 1) {
    throw Error(Errc::NotLeaf, "block " + std::to_string(h) + " is not a leaf block");
  }
  VertexSet removed;
  for (Vertex v : t.blocks[h].vertices)
    if (!t.is_cut_vertex(v)) removed.push_back(v);
  return remove_vertices(g, removed);
}

/// A decomposition of the edge set into complete bipartite pieces whose
/// piece/shared-vertex incidence graph is a tree.
///
/// The biconnected decomposition of a bi-block graph is the finest such
/// structure. Rewrites replace two neighboring pieces by one, which lets a
/// star K_{1,s} count as a single piece once two pendant edges are united.
class BlockStructure {
 public:
  struct Piece {
    VertexSet side_a;  // holds the piece's smallest label
    VertexSet side_b;
    VertexSet vertices;
  };

  static BlockStructure from_tree(const BlockCutTree& t) {
    std::vector<std::pair<VertexSet, VertexSet>> sides;
    for (const auto& block : t.blocks) {
      if (!block.parts) throw Error(Errc::InvalidArgument, "a block is not complete bipartite");
      sides.emplace_back(block.parts->m, block.parts->n);
    }
    return BlockStructure(static_cast<int>(t.incidence.size()), std::move(sides));
  }

  static BlockStructure standard(const Graph& g) { return from_tree(decompose(g)); }

  /// Validates that the pieces are complete bipartite subgraphs of g that
  /// partition its edges and form a tree.
  static BlockStructure from_pieces(const Graph& g,
                                    std::vector<std::pair<VertexSet, VertexSet>> sides) {
    BlockStructure s(g.order(), std::move(sides));
    std::vector<std::uint64_t> covered(static_cast<std::size_t>(g.order()), 0);
    std::size_t total = 0;
    for (const auto& piece : s.pieces_) {
      if (piece.side_a.empty() || piece.side_b.empty())
        throw Error(Errc::InvalidArgument, "piece with an empty side");
      for (Vertex u : piece.side_a) {
        for (Vertex w : piece.side_b) {
          if (!g.has_edge(u, w)) {
            throw Error(Errc::InvalidArgument, "piece pair (" + std::to_string(u) + "," +
                                                  std::to_string(w) + ") is not an edge");
          }
          if (covered[u] >> w & 1U) throw Error(Errc::InvalidArgument, "pieces overlap");
          covered[u] |= bit(w);
          covered[w] |= bit(u);
        }
      }
      total += piece.side_a.size() * piece.side_b.size();
    }
    if (total != g.size()) throw Error(Errc::InvalidArgument, "pieces do not cover every edge");
    if (!s.is_tree()) throw Error(Errc::InvalidArgument, "pieces do not form a tree");
    return s;
  }

  int order() const noexcept { return order_; }
  int block_count() const noexcept { return static_cast<int>(pieces_.size()); }
  const Piece& piece(int i) const { return pieces_.at(i); }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  const std::vector<int>& blocks_at(Vertex v) const { return incidence_.at(v); }
  int index(Vertex v) const { return static_cast<int>(incidence_.at(v).size()); }
  bool is_cut_vertex(Vertex v) const { return index(v) >= 2; }

  VertexSet cut_vertices_of(int i) const {
    VertexSet out;
    for (Vertex v : piece(i).vertices)
      if (is_cut_vertex(v)) out.push_back(v);
    return out;
  }

  bool is_leaf(int i) const { return cut_vertices_of(i).size() <= 1; }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int i = 0; i < block_count(); ++i)
      if (is_leaf(i)) out.push_back(i);
    return out;
  }

  std::optional<Vertex> shared_vertex(int i, int j) const {
    if (i == j) return std::nullopt;
    for (Vertex v : piece(i).vertices)
      if (contains(piece(j).vertices, v)) return v;
    return std::nullopt;
  }

  /// Side of piece i containing v, and the opposite side.
  std::pair<const VertexSet&, const VertexSet&> sides_facing(int i, Vertex v) const {
    const auto& p = piece(i);
    if (contains(p.side_a, v)) return {p.side_a, p.side_b};
    if (contains(p.side_b, v)) return {p.side_b, p.side_a};
    throw Error(Errc::InvalidArgument,
                "vertex " + std::to_string(v) + " not in piece " + std::to_string(i));
  }

  /// The other piece at a vertex of index exactly 2.
  int other_block_at(Vertex v, int i) const {
    const auto& ids = blocks_at(v);
    if (ids.size() != 2) throw Error(Errc::InvalidArgument, "vertex index is not 2");
    return ids[0] == i ? ids[1] : ids[0];
  }

  /// Pieces i and j replaced by the single piece K(x, y) on their vertex union.
  BlockStructure merged(int i, int j, VertexSet x, VertexSet y) const {
    std::vector<std::pair<VertexSet, VertexSet>> sides;
    for (int b = 0; b < block_count(); ++b)
      if (b != i && b != j) sides.emplace_back(pieces_[b].side_a, pieces_[b].side_b);
    sides.emplace_back(std::move(x), std::move(y));
    return BlockStructure(order_, std::move(sides));
  }

 private:
  BlockStructure(int order, std::vector<std::pair<VertexSet, VertexSet>> sides) : order_(order) {
    for (auto& [a, b] : sides) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (!a.empty() && !b.empty() && b.front() < a.front()) std::swap(a, b);
      Piece piece{a, b, {}};
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(piece.vertices));
      pieces_.push_back(std::move(piece));
    }
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& p, const Piece& q) { return p.vertices < q.vertices; });
    incidence_.resize(static_cast<std::size_t>(order));
    for (int i = 0; i < block_count(); ++i)
      for (Vertex v : pieces_[i].vertices) {
        if (v < 0 || v >= order) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
        incidence_[v].push_back(i);
      }
  }

  bool is_tree() const {
    // Nodes: pieces, then shared vertices. Edges: piece/vertex incidences.
    const int b = block_count();
    std::vector<int> node_of(static_cast<std::size_t>(order_), -1);
    int nodes = b;
    std::size_t links = 0;
    for (Vertex v = 0; v < order_; ++v) {
      if (index(v) == 0) return false;
      if (index(v) >= 2) {
        node_of[v] = nodes++;
        links += incidence_[v].size();
      }
    }
    if (links + 1 != static_cast<std::size_t>(nodes)) return false;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int groups = nodes;
    for (Vertex v = 0; v < order_; ++v) {
      if (node_of[v] < 0) continue;
      for (int piece_id : incidence_[v]) {
        int r1 = find(node_of[v]);
        int r2 = find(piece_id);
        if (r1 != r2) {
          parent[r1] = r2;
          --groups;
        }
      }
    }
    return groups == 1;
  }

  int order_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<int>> incidence_;
};

}  // namespace biblock
