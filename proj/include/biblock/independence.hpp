#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "biblock/blocks.hpp"
#include "biblock/graph.hpp"

namespace biblock {

struct AlphaResult {
  int alpha = 0;
  VertexSet witness;
};

inline constexpr int kBruteForceLimit = 24;

inline bool is_independent(const Graph& g, const VertexSet& set) {
  std::uint64_t mask = mask_of(set);
  for (Vertex v : set)
    if (g.row(v) & mask) return false;
  return true;
}

/// Independence number of a bipartite graph via maximum matching.
///
/// Hopcroft-Karp layered augmentation, then the alternating-path (König)
/// construction: with Z the vertices reachable from free left vertices,
/// (L ∩ Z) ∪ (R \ Z) is a maximum independent set. The witness is whatever
/// this construction yields, not a canonical choice.
inline AlphaResult alpha_matching(const Graph& g) {
  auto coloring = two_coloring(g);
  if (!coloring) throw Error(Errc::NotBipartite, "matching route needs a bipartite graph");
  const auto& color = *coloring;
  const int k = g.order();
  constexpr int kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();

  std::vector<Vertex> left;
  for (Vertex v = 0; v < k; ++v)
    if (color[v] == 0) left.push_back(v);
  std::vector<Vertex> mate(static_cast<std::size_t>(k), kFree);
  std::vector<int> layer(static_cast<std::size_t>(k), kInf);

  auto layered = [&] {
    std::queue<Vertex> queue;
    bool found = false;
    for (Vertex u : left) {
      layer[u] = mate[u] == kFree ? 0 : kInf;
      if (mate[u] == kFree) queue.push(u);
    }
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        Vertex next = mate[w];
        if (next == kFree) {
          found = true;
        } else if (layer[next] == kInf) {
          layer[next] = layer[u] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  };

  std::function<bool(Vertex)> augment = [&](Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      Vertex next = mate[w];
      if (next == kFree || (layer[next] == layer[u] + 1 && augment(next))) {
        mate[u] = w;
        mate[w] = u;
        return true;
      }
    }
    layer[u] = kInf;
    return false;
  };

  int matching = 0;
  while (layered()) {
    for (Vertex u : left)
      if (mate[u] == kFree && augment(u)) ++matching;
  }

  std::vector<char> reached(static_cast<std::size_t>(k), 0);
  std::queue<Vertex> queue;
  for (Vertex u : left) {
    if (mate[u] == kFree) {
      reached[u] = 1;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (reached[w]) continue;
      reached[w] = 1;
      Vertex back = mate[w];
      if (back != kFree && !reached[back]) {
        reached[back] = 1;
        queue.push(back);
      }
    }
  }

  AlphaResult result;
  for (Vertex v = 0; v < k; ++v) {
    bool on_left = color[v] == 0;
    if ((on_left && reached[v]) || (!on_left && !reached[v])) result.witness.push_back(v);
  }
  result.alpha = k - matching;
  return result;
}

namespace detail {

struct MaxIndependentSearch {
  const Graph& g;
  std::uint64_t best = 0;
  int best_size = -1;

  // Include-first branching on the smallest candidate visits sets in
  // lexicographic order, so the first set of a given size is the smallest.
  void run(std::uint64_t candidates, std::uint64_t chosen, int size) {
    if (candidates == 0) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + std::popcount(candidates) <= best_size) return;
    Vertex v = std::countr_zero(candidates);
    run(candidates & ~g.row(v) & ~bit(v), chosen | bit(v), size + 1);
    // Any set avoiding an isolated candidate can be extended by it.
    if (g.row(v) & candidates) run(candidates & ~bit(v), chosen, size);
  }
};

struct AllMaximumSets {
  const Graph& g;
  int target;
  std::vector<std::uint64_t> found;

  void run(std::uint64_t candidates, std::uint64_t chosen, int size) {
    if (size + std::popcount(candidates) < target) return;
    if (candidates == 0) {
      found.push_back(chosen);
      return;
    }
    Vertex v = std::countr_zero(candidates);
    run(candidates & ~g.row(v) & ~bit(v), chosen | bit(v), size + 1);
    if (g.row(v) & candidates) run(candidates & ~bit(v), chosen, size);
  }
};

inline void require_small(const Graph& g) {
  if (g.order() > kBruteForceLimit) {
    throw Error(Errc::TooLarge, "exhaustive search limited to " +
                                    std::to_string(kBruteForceLimit) + " vertices");
  }
}

}  // namespace detail

/// Exact independence number by branch and bound; the witness is the
/// lexicographically smallest maximum independent set.
inline AlphaResult alpha_bruteforce(const Graph& g) {
  detail::require_small(g);
  detail::MaxIndependentSearch search{g};
  search.run(all_vertices(g), 0, 0);
  return {search.best_size, set_of(search.best)};
}

/// Every maximum independent set, in lexicographic order.
inline std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
  detail::require_small(g);
  detail::AllMaximumSets search{g, alpha_bruteforce(g).alpha, {}};
  search.run(all_vertices(g), 0, 0);
  std::vector<VertexSet> sets;
  sets.reserve(search.found.size());
  for (auto mask : search.found) sets.push_back(set_of(mask));
  return sets;
}

/// Matching route for bipartite graphs, exhaustive search otherwise.
inline int independence_number(const Graph& g) {
  return is_bipartite(g) ? alpha_matching(g).alpha : alpha_bruteforce(g).alpha;
}

/// Range [ceil(k/2), k-1] of α over connected bipartite graphs on k vertices.
inline std::pair<int, int> alpha_bounds(int k) {
  if (k < 2) throw Error(Errc::InvalidSize, "bounds need k >= 2");
  return {(k + 1) / 2, k - 1};
}

enum class LeafCaseTag { CutInSet, CutOutRestrictionMaximal, CutOutRestrictionNotMaximal };

inline std::string to_string(LeafCaseTag tag) {
  switch (tag) {
    case LeafCaseTag::CutInSet: return "CutInSet";
    case LeafCaseTag::CutOutRestrictionMaximal: return "CutOutRestrictionMaximal";
    case LeafCaseTag::CutOutRestrictionNotMaximal: return "CutOutRestrictionNotMaximal";
  }
  return "?";
}

struct LeafCase {
  LeafCaseTag tag;
  int restriction_size;
};

inline Vertex leaf_cut_vertex(const BlockCutTree& t, int h) {
  if (t.blocks.size() < 2) throw Error(Errc::SingleBlock, "graph has a single block");
  if (t.cut_count(h) != 1) throw Error(Errc::NotLeaf, "block " + std::to_string(h) + " is not a leaf");
  for (Vertex v : t.blocks[h].vertices)
    if (t.is_cut_vertex(v)) return v;
  return -1;
}

/// How a maximum independent set meets the rest of the graph once leaf block h is peeled.
inline LeafCase classify_leaf(const Graph& g, const BlockCutTree& t, int h,
                              const VertexSet& witness) {
  if (!is_independent(g, witness) ||
      static_cast<int>(witness.size()) != independence_number(g)) {
    throw Error(Errc::NotMaximum, "witness is not a maximum independent set");
  }
  Vertex v = leaf_cut_vertex(t, h);
  auto peeled = peel_leaf_block(g, t, h);
  int restriction = 0;
  for (Vertex u : witness) restriction += contains(peeled.original, u) ? 1 : 0;
  if (contains(witness, v)) return {LeafCaseTag::CutInSet, restriction};
  int alpha_rest = independence_number(peeled.graph);
  return {restriction == alpha_rest ? LeafCaseTag::CutOutRestrictionMaximal
                                    : LeafCaseTag::CutOutRestrictionNotMaximal,
          restriction};
}

struct LeafAlphaEntry {
  int block;
  int m;  // larger side
  int n;  // smaller side
  int alpha_graph;
  int alpha_peeled;
  int difference;
  bool holds;
};

struct LeafAlphaReport {
  std::vector<LeafAlphaEntry> entries;
  bool ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.holds; });
  }
};

/// For every leaf block K_{m,n} (m >= n): α(G) - α(G - H) must be m or m - 1.
inline LeafAlphaReport verify_leaf_alpha_dichotomy(const Graph& g) {
  auto t = decompose(g);
  if (t.blocks.size() < 2) throw Error(Errc::SingleBlock, "needs at least two blocks");
  int alpha = alpha_matching(g).alpha;
  LeafAlphaReport report;
  for (int h : leaf_blocks(t)) {
    const auto& parts = t.blocks[h].parts;
    if (!parts) throw Error(Errc::InvalidArgument, "leaf block is not complete bipartite");
    int m = static_cast<int>(std::max(parts->m.size(), parts->n.size()));
    int n = static_cast<int>(std::min(parts->m.size(), parts->n.size()));
    int rest = alpha_matching(peel_leaf_block(g, t, h).graph).alpha;
    int diff = alpha - rest;
    report.entries.push_back({h, m, n, alpha, rest, diff, diff == m || diff == m - 1});
  }
  return report;
}

enum class ClaimStatus { NotApplicable, Holds, Violated };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::NotApplicable: return "not_applicable";
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Violated: return "violated";
  }
  return "?";
}

struct VertexDeletionReport {
  ClaimStatus status;
  int alpha_graph;
  int alpha_deleted;
  bool vertex_in_some_maximum_set;
  bool deleted_set_not_maximum;
};

/// If v lies in some maximum independent set J of G and some maximum
/// independent set I of G - v is not maximum in G, then |J| = |I| + 1.
inline VertexDeletionReport verify_vertex_deletion(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
  auto sets = maximum_independent_sets(g);
  int alpha = static_cast<int>(sets.front().size());
  bool in_some = std::any_of(sets.begin(), sets.end(),
                             [&](const VertexSet& s) { return contains(s, v); });
  int alpha_deleted = 0;
  bool not_maximum = false;
  if (g.order() > 1) {
    auto rest = remove_vertices(g, {v});
    for (const auto& s : maximum_independent_sets(rest.graph)) {
      alpha_deleted = static_cast<int>(s.size());
      // Lifted back into G the set stays independent; it is maximum there iff sizes agree.
      if (alpha_deleted != alpha) not_maximum = true;
    }
  }
  VertexDeletionReport report{ClaimStatus::NotApplicable, alpha, alpha_deleted, in_some,
                              not_maximum};
  if (in_some && not_maximum)
    report.status = alpha == alpha_deleted + 1 ? ClaimStatus::Holds : ClaimStatus::Violated;
  return report;
}

}  // namespace biblock
