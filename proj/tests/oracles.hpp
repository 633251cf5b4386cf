#pragma once

// Independent reference implementations used only by the tests.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "biblock/biblock.hpp"

namespace oracle {

using biblock::Edge;
using biblock::Graph;
using biblock::Vertex;

inline bool connected_without(const Graph& g, Vertex v) {
  std::uint64_t allowed = biblock::all_vertices(g) & ~biblock::bit(v);
  if (allowed == 0) return true;
  Vertex start = std::countr_zero(allowed);
  return biblock::component_mask(g, start, allowed) == allowed;
}

inline std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!connected_without(g, v)) out.push_back(v);
  return out;
}

inline double dense_rho(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (auto [u, w] : g.edges()) a(u, w) = a(w, u) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Every connected bi-block graph on k vertices, from all edge subsets of
// K_k, filtered and deduplicated by canonical form.
inline std::set<biblock::CanonicalForm> all_biblock_forms(int k) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex w = u + 1; w < k; ++w) pairs.emplace_back(u, w);
  std::set<biblock::CanonicalForm> forms;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const std::uint64_t everyone = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k));
  for (std::uint64_t subset = 0; subset < total; ++subset) {
    if (std::popcount(subset) < k - 1) continue;
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (subset >> i & 1U) {
        rows[pairs[i].first] |= std::uint64_t{1} << pairs[i].second;
        rows[pairs[i].second] |= std::uint64_t{1} << pairs[i].first;
      }
    }
    // Two-color by breadth-first layers; also detects disconnection.
    std::uint64_t color[2] = {1, 0}, frontier = 1, seen = 1;
    bool odd = false;
    for (int layer = 1; frontier != 0 && !odd; ++layer) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
      if (next & color[(layer & 1) ^ 1]) odd = true;
      next &= ~seen;
      color[layer & 1] |= next;
      seen |= next;
      frontier = next;
    }
    if (odd || seen != everyone) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (subset >> i & 1U) edges.push_back(pairs[i]);
    Graph g(k, edges);
    if (!biblock::is_bi_block(g)) continue;
    forms.insert(biblock::canonical_form(g));
  }
  return forms;
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return biblock::relabel(g, perm);
}

// Random spanning tree over a random 2-coloring, plus cross edges with probability `density`.
inline Graph random_connected_bipartite(int k, double density, std::mt19937_64& rng) {
  std::vector<int> side(static_cast<std::size_t>(k));
  side[0] = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto add = [&](Vertex u, Vertex w) {
    Edge e{std::min(u, w), std::max(u, w)};
    if (seen.insert(e).second) edges.push_back(e);
  };
  for (Vertex v = 1; v < k; ++v) {
    Vertex parent = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    side[v] = 1 - side[parent];
    add(parent, v);
  }
  std::bernoulli_distribution coin(density);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex w = u + 1; w < k; ++w)
      if (side[u] != side[w] && coin(rng)) add(u, w);
  return Graph(k, edges);
}

// Random bi-block graph: repeatedly glue a small complete bipartite block at a random vertex.
inline Graph random_biblock(int target, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 3);
  Graph g = biblock::complete_bipartite(size(rng), size(rng));
  while (g.order() < target) {
    int a = size(rng), b = size(rng);
    if (g.order() + a + b - 1 > target) {
      a = 1;
      b = 1;
    }
    Vertex at = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
    biblock::VertexSet sa{at}, sb;
    Vertex next = g.order();
    for (int i = 1; i < a; ++i) sa.push_back(next++);
    for (int i = 0; i < b; ++i) sb.push_back(next++);
    auto edges = g.edges();
    auto fresh = biblock::complete_between(sa, sb);
    edges.insert(edges.end(), fresh.begin(), fresh.end());
    g = Graph(next, edges);
  }
  return random_relabel(g, rng);
}

inline std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w)
      if (!g.has_edge(u, w)) out.emplace_back(u, w);
  return out;
}

}  // namespace oracle
