#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biblock/blocks.hpp"
#include "biblock/graph.hpp"
#include "biblock/independence.hpp"
#include "biblock/spectral.hpp"

namespace biblock {

enum class RewriteKind { MergeBlocks, ReattachCutVertex, SplitPartition, ReduceBlockIndex };

inline std::string to_string(RewriteKind kind) {
  switch (kind) {
    case RewriteKind::MergeBlocks: return "MergeBlocks";
    case RewriteKind::ReattachCutVertex: return "ReattachCutVertex";
    case RewriteKind::SplitPartition: return "SplitPartition";
    case RewriteKind::ReduceBlockIndex: return "ReduceBlockIndex";
  }
  return "?";
}

/// Which stored sides of two pieces unite: a with a (Aligned) or a with b (Crossed).
enum class Orientation { Aligned, Crossed };

inline std::string to_string(Orientation o) { return o == Orientation::Aligned ? "aligned" : "crossed"; }

/// A transformation of a bi-block graph together with its selection data.
///
/// For MergeBlocks, ReattachCutVertex and SplitPartition, `first` is the
/// piece F and `second` is the piece H; for ReduceBlockIndex both are pieces
/// at `vertex`. Piece ids refer to the structure the step was found in.
struct RewriteStep {
  RewriteKind kind = RewriteKind::MergeBlocks;
  int first = -1;
  int second = -1;
  Vertex vertex = -1;
  Orientation orientation = Orientation::Aligned;
  VertexSet n1;
  std::string case_label;
};

struct RewriteOutcome {
  RewriteStep step;
  Graph result;
  BlockStructure structure;
  double rho_before = 0;
  double rho_after = 0;
  double delta_rho = 0;
  double quad_delta = 0;
  int alpha_before = 0;
  int alpha_after = 0;
  bool changes_graph = false;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  std::string trace;
};

inline constexpr double kMonotoneSlack = 1e-10;

namespace detail {

inline VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool meets(const VertexSet& a, const VertexSet& b) {
  return std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end();
}

inline Vertex shared_or_throw(const BlockStructure& s, int i, int j) {
  if (i < 0 || j < 0 || i >= s.block_count() || j >= s.block_count())
    throw Error(Errc::OutOfRange, "piece id out of range");
  auto v = s.shared_vertex(i, j);
  if (!v) {
    throw Error(Errc::NotNeighbors, "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                                        " share no vertex");
  }
  return *v;
}

struct Replacement {
  Graph graph;
  BlockStructure structure;
};

// Pieces i and j replaced by K(x, y). Inside a tree of pieces the only edges
// among their vertices belong to those two pieces, so nothing else changes.
inline Replacement replace_pair(const Graph& g, const BlockStructure& s, int i, int j,
                                const VertexSet& x, const VertexSet& y) {
  std::vector<std::uint64_t> dropped(static_cast<std::size_t>(g.order()), 0);
  for (int id : {i, j}) {
    const auto& piece = s.piece(id);
    for (Vertex a : piece.side_a)
      for (Vertex b : piece.side_b) dropped[std::min(a, b)] |= bit(std::max(a, b));
  }
  std::vector<Edge> edges;
  for (auto [u, w] : g.edges())
    if (!(dropped[u] >> w & 1U)) edges.emplace_back(u, w);
  auto fresh = complete_between(x, y);
  edges.insert(edges.end(), fresh.begin(), fresh.end());
  return {Graph(g.order(), edges), s.merged(i, j, x, y)};
}

inline void fail_post(const std::string& what) { throw Error(Errc::PostconditionFailed, what); }

inline RewriteOutcome finish(const Graph& g, Replacement rep, RewriteStep step, int alpha_before,
                             std::string trace) {
  RewriteOutcome out{std::move(step), std::move(rep.graph), std::move(rep.structure), 0, 0, 0, 0, 0,
                     0, false, {}, {}, {}};
  const Graph& h = out.result;
  if (h.order() != g.order()) fail_post("vertex count changed");
  for (auto e : g.edges())
    if (!h.has_edge(e.first, e.second)) out.removed.push_back(e);
  for (auto e : h.edges())
    if (!g.has_edge(e.first, e.second)) out.added.push_back(e);
  out.changes_graph = !out.removed.empty() || !out.added.empty();
  if (!is_connected(h)) fail_post("result is disconnected");
  if (!is_bi_block(h)) fail_post("result is not bi-block");
  out.alpha_before = alpha_before;
  out.alpha_after = alpha_matching(h).alpha;
  if (out.alpha_after != alpha_before) fail_post("independence number changed");
  auto before = perron(g);
  out.rho_before = before.rho;
  out.rho_after = out.changes_graph ? perron(h).rho : before.rho;
  out.delta_rho = out.rho_after - out.rho_before;
  out.quad_delta = quad_form_delta(g, h, before.vector);
  if (out.delta_rho < -kMonotoneSlack) fail_post("spectral radius decreased");
  if (out.quad_delta < -kMonotoneSlack) fail_post("quadratic form decreased");
  if (out.removed.empty() && !out.added.empty() && !(out.delta_rho > kMonotoneSlack))
    fail_post("edge additions did not raise the spectral radius");
  out.trace = std::move(trace);
  return out;
}

inline std::string describe(const char* what, const VertexSet& x, const VertexSet& y) {
  auto list = [](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  return std::string(what) + " K(" + list(x) + ", " + list(y) + ")";
}

}  // namespace detail

/// The orientation that puts the shared vertex's two sides together.
inline Orientation orientation_for(const BlockStructure& s, int f, int h) {
  Vertex v = detail::shared_or_throw(s, f, h);
  bool fa = contains(s.piece(f).side_a, v);
  bool ha = contains(s.piece(h).side_a, v);
  return fa == ha ? Orientation::Aligned : Orientation::Crossed;
}

/// Replaces neighboring pieces f and h by the complete bipartite graph on united sides.
inline RewriteOutcome merge_blocks(const Graph& g, const BlockStructure& s, int f, int h,
                                   Orientation orientation, std::string label = "merge") {
  Vertex v = detail::shared_or_throw(s, f, h);
  const auto& F = s.piece(f);
  const auto& H = s.piece(h);
  bool aligned = orientation == Orientation::Aligned;
  VertexSet x = detail::unite(F.side_a, aligned ? H.side_a : H.side_b);
  VertexSet y = detail::unite(F.side_b, aligned ? H.side_b : H.side_a);
  if (contains(x, v) && contains(y, v)) {
    throw Error(Errc::OrientationMismatch,
                "vertex " + std::to_string(v) + " would sit on both united sides");
  }
  int alpha = alpha_matching(g).alpha;
  auto rep = detail::replace_pair(g, s, f, h, x, y);
  if (alpha_matching(rep.graph).alpha != alpha)
    throw Error(Errc::PreconditionFailed, "merging these pieces changes the independence number");
  RewriteStep step{RewriteKind::MergeBlocks, f, h, v, orientation, {}, std::move(label)};
  auto trace = detail::describe((step.case_label + ": merge into").c_str(), x, y);
  return detail::finish(g, std::move(rep), std::move(step), alpha, std::move(trace));
}

inline RewriteOutcome merge_blocks(const Graph& g, const BlockStructure& s, int f, int h) {
  return merge_blocks(g, s, f, h, orientation_for(s, f, h));
}

/// Sides of leaf H at v and its neighbor F: v ∈ Q ∩ M.
struct PairSides {
  Vertex v;
  VertexSet P, Q, M, N;
};

inline PairSides pair_sides(const BlockStructure& s, int f, int h) {
  Vertex v = detail::shared_or_throw(s, f, h);
  auto [Q, P] = s.sides_facing(f, v);
  auto [M, N] = s.sides_facing(h, v);
  return {v, P, Q, M, N};
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::PreconditionFailed, what);
}

inline std::optional<Vertex> non_cut_in(const BlockStructure& s, const VertexSet& side, Vertex v) {
  for (Vertex c : side)
    if (c != v && !s.is_cut_vertex(c)) return c;
  return std::nullopt;
}

// H must be a leaf at v and v must lie in exactly F and H.
inline void require_leaf_pair(const BlockStructure& s, int f, int h, Vertex v) {
  require(s.is_leaf(h), "piece " + std::to_string(h) + " is not a leaf");
  require(s.index(v) == 2, "shared vertex must lie in exactly two pieces");
  (void)f;
}

inline LeafEigenData leaf_data(const Graph& g, const PairSides& ps, int f, int h, Vertex c) {
  LeafConfiguration cfg{h, f, ps.v, c, ps.P, ps.Q, ps.M, ps.N};
  return extract_leaf_data(cfg, perron(g));
}

}  // namespace detail

/// Moves the cut vertex: F ⊙ H becomes K(P ∪ M, (Q∖{v}) ∪ N).
///
/// With exactly two pieces this needs q > p, n > m and p < q − 1. Inside a
/// larger structure H must be a leaf, n > m, Q∖{v} must hold a vertex c of
/// no other piece, and the Perron entries must satisfy b_m ≥ b_n.
inline RewriteOutcome reattach_cut_vertex(const Graph& g, const BlockStructure& s, int f, int h,
                                          std::string label = "reattach") {
  auto ps = pair_sides(s, f, h);
  const int p = static_cast<int>(ps.P.size()), q = static_cast<int>(ps.Q.size());
  const int m = static_cast<int>(ps.M.size()), n = static_cast<int>(ps.N.size());
  if (s.block_count() == 2) {
    detail::require(q > p, "needs q > p");
    detail::require(n > m, "needs n > m");
    detail::require(p < q - 1, "needs p < q - 1 (p = q - 1 is a plain merge)");
  } else {
    detail::require_leaf_pair(s, f, h, ps.v);
    detail::require(n > m, "needs n > m");
    auto c = detail::non_cut_in(s, ps.Q, ps.v);
    detail::require(c.has_value(), "Q minus the cut vertex has no vertex outside other pieces");
    auto d = detail::leaf_data(g, ps, f, h, *c);
    detail::require(d.b_m >= d.b_n, "needs b_m >= b_n");
  }
  VertexSet x = detail::unite(ps.P, ps.M);
  VertexSet y = detail::unite(detail::minus(ps.Q, {ps.v}), ps.N);
  int alpha = alpha_matching(g).alpha;
  auto rep = detail::replace_pair(g, s, f, h, x, y);
  detail::require(alpha_matching(rep.graph).alpha == alpha,
                  "reattaching changes the independence number");
  RewriteStep step{RewriteKind::ReattachCutVertex, f, h, ps.v, orientation_for(s, f, h), {},
                   std::move(label)};
  auto trace = detail::describe((step.case_label + ": reattach into").c_str(), x, y);
  return detail::finish(g, std::move(rep), std::move(step), alpha, std::move(trace));
}

/// N = N1 ∪ N2 with |N1| = m; F ⊙ H becomes K(P ∪ N1, Q ∪ M ∪ N2).
///
/// Needs H a leaf with n > m, a vertex c ∈ Q∖{v} of no other piece, and
/// Perron entries with b_m < b_n.
inline RewriteOutcome split_leaf_partition(const Graph& g, const BlockStructure& s, int f, int h,
                                           const VertexSet& n1, std::string label = "split") {
  auto ps = pair_sides(s, f, h);
  const int m = static_cast<int>(ps.M.size()), n = static_cast<int>(ps.N.size());
  detail::require_leaf_pair(s, f, h, ps.v);
  detail::require(n > m, "needs n > m");
  VertexSet part = n1;
  std::sort(part.begin(), part.end());
  if (static_cast<int>(part.size()) != m ||
      std::adjacent_find(part.begin(), part.end()) != part.end() ||
      !std::includes(ps.N.begin(), ps.N.end(), part.begin(), part.end())) {
    throw Error(Errc::BadSplit, "N1 must be " + std::to_string(m) + " distinct vertices of N");
  }
  auto c = detail::non_cut_in(s, ps.Q, ps.v);
  detail::require(c.has_value(), "Q minus the cut vertex has no vertex outside other pieces");
  auto d = detail::leaf_data(g, ps, f, h, *c);
  detail::require(d.b_m < d.b_n, "needs b_m < b_n");
  VertexSet x = detail::unite(ps.P, part);
  VertexSet y = detail::unite(detail::unite(ps.Q, ps.M), detail::minus(ps.N, part));
  int alpha = alpha_matching(g).alpha;
  auto rep = detail::replace_pair(g, s, f, h, x, y);
  detail::require(alpha_matching(rep.graph).alpha == alpha,
                  "splitting changes the independence number");
  RewriteStep step{RewriteKind::SplitPartition, f, h, ps.v, orientation_for(s, f, h), part,
                   std::move(label)};
  auto trace = detail::describe((step.case_label + ": split into").c_str(), x, y);
  return detail::finish(g, std::move(rep), std::move(step), alpha, std::move(trace));
}

/// Default N1: the m smallest labels of N.
inline VertexSet default_n1(const BlockStructure& s, int f, int h) {
  auto ps = pair_sides(s, f, h);
  std::size_t m = std::min(ps.M.size(), ps.N.size());
  return VertexSet(ps.N.begin(), ps.N.begin() + static_cast<std::ptrdiff_t>(m));
}

/// Unites pieces i and j at v along v's sides, lowering v's index by one.
inline RewriteOutcome reduce_block_index(const Graph& g, const BlockStructure& s, Vertex v, int i,
                                         int j, std::string label = "reduce") {
  if (v < 0 || v >= s.order()) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
  if (s.index(v) < 3) {
    throw Error(Errc::BlockIndexTooSmall,
                "vertex " + std::to_string(v) + " lies in " + std::to_string(s.index(v)) +
                    " pieces, needs at least 3");
  }
  const auto& at = s.blocks_at(v);
  if (i == j || !std::count(at.begin(), at.end(), i) || !std::count(at.begin(), at.end(), j))
    throw Error(Errc::NotNeighbors, "both pieces must contain vertex " + std::to_string(v));
  auto [near_i, far_i] = s.sides_facing(i, v);
  auto [near_j, far_j] = s.sides_facing(j, v);
  VertexSet x = detail::unite(far_i, far_j);
  VertexSet y = detail::unite(near_i, near_j);
  int alpha = alpha_matching(g).alpha;
  auto rep = detail::replace_pair(g, s, i, j, x, y);
  if (alpha_matching(rep.graph).alpha != alpha)
    throw Error(Errc::NoValidPair, "uniting these pieces changes the independence number");
  RewriteStep step{RewriteKind::ReduceBlockIndex, i, j, v, orientation_for(s, i, j), {},
                   std::move(label)};
  auto trace = detail::describe((step.case_label + ": unite into").c_str(), x, y);
  return detail::finish(g, std::move(rep), std::move(step), alpha, std::move(trace));
}

/// Pair of pieces at v (index >= 3) whose union keeps `witness` independent.
///
/// Looks at the three smallest pieces at v. A piece the witness misses pairs
/// with the smallest other; otherwise two pieces where the witness sits on
/// the same side (relative to v) are paired, smallest ids first.
inline std::pair<int, int> select_reduction_pair(const BlockStructure& s, Vertex v,
                                                 const VertexSet& witness) {
  if (s.index(v) < 3) throw Error(Errc::BlockIndexTooSmall, "vertex index below 3");
  std::vector<int> ids(s.blocks_at(v).begin(), s.blocks_at(v).begin() + 3);
  enum Type { Empty, Far, Near };
  std::vector<Type> type;
  for (int id : ids) {
    auto [near, far] = s.sides_facing(id, v);
    if (detail::meets(far, witness)) type.push_back(Far);
    else if (detail::meets(near, witness)) type.push_back(Near);
    else type.push_back(Empty);
  }
  for (int a = 0; a < 3; ++a) {
    if (type[a] != Empty) continue;
    int b = a == 0 ? 1 : 0;
    return {std::min(ids[a], ids[b]), std::max(ids[a], ids[b])};
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (type[a] == type[b]) return {ids[a], ids[b]};
  throw Error(Errc::NoValidPair, "no pair of pieces at vertex " + std::to_string(v));
}

namespace detail {

struct StepFinder {
  const Graph& g;
  const BlockStructure& s;
  const VertexSet& witness;
  std::optional<PerronPair> pair;
  std::vector<RewriteStep> steps;

  const PerronPair& perron_pair() {
    if (!pair) pair = perron(g);
    return *pair;
  }

  void merge(int f, int h, std::string label) {
    RewriteStep step{RewriteKind::MergeBlocks, f, h, *s.shared_vertex(f, h),
                     orientation_for(s, f, h), {}, std::move(label)};
    push(std::move(step));
  }

  void push(RewriteStep step) {
    for (const auto& e : steps) {
      if (e.kind == step.kind && e.first == step.first && e.second == step.second &&
          e.vertex == step.vertex && e.n1 == step.n1)
        return;
    }
    steps.push_back(std::move(step));
  }

  void two_pieces() {
    auto ps = pair_sides(s, 0, 1);
    const int p = static_cast<int>(ps.P.size()), q = static_cast<int>(ps.Q.size());
    const int m = static_cast<int>(ps.M.size()), n = static_cast<int>(ps.N.size());
    if (p >= q && n >= m) return merge(0, 1, "two_block:p>=q,n>=m");
    if (q > p && m >= n) return merge(0, 1, "two_block:q>p,m>=n");
    if (q > p && n > m) {
      if (p == q - 1) return merge(0, 1, "two_block:q>p,n>m,p=q-1");
      return push({RewriteKind::ReattachCutVertex, 0, 1, ps.v, orientation_for(s, 0, 1), {},
                   "two_block:q>p,n>m,p<q-1"});
    }
    if (p > q && m > n) {
      if (n == m - 1) return merge(0, 1, "two_block:p>q,m>n,n=m-1");
      return push({RewriteKind::ReattachCutVertex, 1, 0, ps.v, orientation_for(s, 1, 0), {},
                   "two_block:p>q,m>n,n<m-1"});
    }
    merge(0, 1, "two_block:p=q,m>n");
  }

  // Leaf h at v against its neighbor f, under the witness. With `chain`
  // false the far-side search is skipped.
  void leaf(int h, bool chain) {
    auto cuts = s.cut_vertices_of(h);
    if (cuts.size() != 1) return;
    Vertex v = cuts.front();
    if (s.index(v) != 2) return;
    int f = s.other_block_at(v, h);
    auto ps = pair_sides(s, f, h);
    const int m = static_cast<int>(ps.M.size()), n = static_cast<int>(ps.N.size());
    bool in_p = meets(ps.P, witness);
    bool in_q = meets(ps.Q, witness);
    if (!in_p && !in_q) return merge(f, h, "leaf:witness_misses_F");
    if (!in_p) {
      if (m >= n) return merge(f, h, "leaf:witness_in_Q,m>=n");
      auto c = non_cut_in(s, ps.Q, v);
      if (!c) {
        for (Vertex u : ps.Q) {
          if (u == v || !contains(witness, u) || s.index(u) != 2) continue;
          return merge(f, s.other_block_at(u, f), "leaf:witness_in_Q,n>m,Q_all_cut");
        }
        return;
      }
      LeafConfiguration cfg{h, f, v, *c, ps.P, ps.Q, ps.M, ps.N};
      auto d = extract_leaf_data(cfg, perron_pair());
      if (d.b_m >= d.b_n) {
        return push({RewriteKind::ReattachCutVertex, f, h, v, orientation_for(s, f, h), {},
                     "leaf:witness_in_Q,n>m,b_m>=b_n"});
      }
      VertexSet n1(ps.N.begin(), ps.N.begin() + m);
      return push({RewriteKind::SplitPartition, f, h, v, orientation_for(s, f, h), n1,
                   "leaf:witness_in_Q,n>m,b_m<b_n"});
    }
    if (!in_q && n >= m - 1) return merge(f, h, "leaf:witness_in_P,n>=m-1");
    if (!in_q && chain) {
      std::vector<char> seen(static_cast<std::size_t>(s.block_count()), 0);
      seen[h] = 1;
      far_side(f, ps.P, seen);
    }
  }

  // From piece cur, whose side `forward` the witness may meet while its
  // other side is witness-free, look for a neighbor D through a vertex u of
  // `forward` whose far side the witness misses.
  void far_side(int cur, const VertexSet& forward, std::vector<char>& seen) {
    seen[cur] = 1;
    for (Vertex u : forward) {
      for (int d : s.blocks_at(u)) {
        if (seen[d]) continue;
        auto [near, far] = s.sides_facing(d, u);
        if (!meets(far, witness)) {
          merge(cur, d, "chain:witness_misses_far_side");
          continue;
        }
        if (s.is_leaf(d)) {
          leaf(d, false);
          seen[d] = 1;
          continue;
        }
        VertexSet next = far;
        far_side(d, next, seen);
      }
    }
  }

  void reductions() {
    for (Vertex v = 0; v < s.order(); ++v) {
      if (s.index(v) < 3) continue;
      auto [i, j] = select_reduction_pair(s, v, witness);
      push({RewriteKind::ReduceBlockIndex, i, j, v, orientation_for(s, i, j), {},
            "reduce_index"});
    }
  }
};

}  // namespace detail

/// Rewrite steps whose hypotheses hold for this structure and maximum independent set.
///
/// While some vertex lies in three or more pieces only index reductions are
/// offered. Otherwise two pieces get the two-block analysis and larger
/// structures get one analysis per leaf. Empty once a single piece remains.
inline std::vector<RewriteStep> find_applicable(const Graph& g, const BlockStructure& s,
                                                const VertexSet& witness) {
  if (!is_independent(g, witness) || static_cast<int>(witness.size()) != alpha_matching(g).alpha)
    throw Error(Errc::NotMaximum, "witness is not a maximum independent set");
  detail::StepFinder finder{g, s, witness, std::nullopt, {}};
  if (s.block_count() < 2) return {};
  finder.reductions();
  if (!finder.steps.empty()) return finder.steps;
  if (s.block_count() == 2) {
    finder.two_pieces();
    return finder.steps;
  }
  for (int h : s.leaves()) finder.leaf(h, true);
  return finder.steps;
}

inline std::vector<RewriteStep> find_applicable(const Graph& g, const VertexSet& witness) {
  return find_applicable(g, BlockStructure::standard(g), witness);
}

inline RewriteOutcome apply(const Graph& g, const BlockStructure& s, const RewriteStep& step) {
  switch (step.kind) {
    case RewriteKind::MergeBlocks:
      return merge_blocks(g, s, step.first, step.second, step.orientation, step.case_label);
    case RewriteKind::ReattachCutVertex:
      return reattach_cut_vertex(g, s, step.first, step.second, step.case_label);
    case RewriteKind::SplitPartition:
      return split_leaf_partition(g, s, step.first, step.second, step.n1, step.case_label);
    case RewriteKind::ReduceBlockIndex:
      return reduce_block_index(g, s, step.vertex, step.first, step.second, step.case_label);
  }
  throw Error(Errc::InvalidArgument, "unknown rewrite kind");
}

struct NormalizeResult {
  Graph result;
  std::vector<RewriteOutcome> trace;
  int initial_blocks = 0;
  /// (initial blocks − 1) + Σ_v max(0, index(v) − 2).
  int step_bound = 0;
  int alpha = 0;
};

/// Applies the first applicable step until the graph is complete bipartite.
///
/// Every step unites two pieces, so at most (pieces − 1) steps run. Some of
/// them (two pendant edges at a star center) leave the graph unchanged.
inline NormalizeResult normalize(const Graph& g) {
  if (!is_bi_block(g)) throw Error(Errc::InvalidArgument, "normalize needs a bi-block graph");
  auto s = BlockStructure::standard(g);
  NormalizeResult out{g, {}, s.block_count(), s.block_count() - 1, alpha_matching(g).alpha};
  for (Vertex v = 0; v < g.order(); ++v) out.step_bound += std::max(0, s.index(v) - 2);
  Graph current = g;
  while (!is_complete_bipartite(current)) {
    auto steps = find_applicable(current, s, alpha_matching(current).witness);
    if (steps.empty()) {
      throw Error(Errc::Stuck, "no applicable rewrite with " + std::to_string(s.block_count()) +
                                   " pieces left");
    }
    auto outcome = apply(current, s, steps.front());
    current = outcome.result;
    s = outcome.structure;
    out.trace.push_back(std::move(outcome));
  }
  auto parts = complete_bipartite_parts(current);
  int a = static_cast<int>(std::max(parts->m.size(), parts->n.size()));
  if (a != out.alpha) detail::fail_post("final graph is not K_{alpha,k-alpha}");
  out.result = current;
  return out;
}

}  // namespace biblock
