#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "biblock/graph.hpp"

namespace biblock {

/// Isomorphism-invariant key: the vertex count followed by the packed upper
/// triangle of the adjacency matrix under a canonical labeling.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xF]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Color refinement: recolor by (own color, sorted neighbor colors) until the
// number of cells stops growing. Colors stay dense ranks; the cell order
// only ever refines, so the result is equivariant under relabeling.
inline void refine(const Graph& g, std::vector<int>& color) {
  const int k = g.order();
  int cells = 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::pair<std::vector<int>, Vertex>> signature(static_cast<std::size_t>(k));
  while (true) {
    for (Vertex v = 0; v < k; ++v) {
      auto& sig = signature[v].first;
      sig.clear();
      sig.push_back(color[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
      signature[v].second = v;
    }
    std::sort(signature.begin(), signature.end());
    int rank = 0;
    for (int i = 0; i < k; ++i) {
      if (i > 0 && signature[i].first != signature[i - 1].first) ++rank;
      color[signature[i].second] = rank;
    }
    if (rank + 1 == cells) return;
    cells = rank + 1;
  }
}

inline std::vector<std::uint8_t> encode(const Graph& g, const std::vector<int>& label) {
  const int k = g.order();
  std::vector<Vertex> at(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < k; ++v) at[label[v]] = v;
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(k)};
  std::uint8_t acc = 0;
  int filled = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      acc = static_cast<std::uint8_t>(acc << 1 | (g.has_edge(at[i], at[j]) ? 1 : 0));
      if (++filled == 8) {
        bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return bytes;
}

// Vertices with equal neighborhoods (ignoring each other) are exchanged by an
// automorphism fixing everything else, so only one of them needs a branch.
inline bool twins(const Graph& g, Vertex u, Vertex w) {
  return (g.row(u) & ~bit(w)) == (g.row(w) & ~bit(u));
}

struct CanonicalSearch {
  const Graph& g;
  std::vector<std::uint8_t> best;
  std::vector<int> best_label;

  void run(std::vector<int> color) {
    refine(g, color);
    const int k = g.order();
    const int cells = 1 + *std::max_element(color.begin(), color.end());
    if (cells == k) {
      auto code = encode(g, color);
      if (best.empty() || code < best) {
        best = std::move(code);
        best_label = color;
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < k; ++v) {
      if (color[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); }))
        continue;
      tried.push_back(v);
      std::vector<int> next(color);
      for (Vertex u = 0; u < k; ++u) {
        if (color[u] > target || (color[u] == target && u != v)) ++next[u];
      }
      run(std::move(next));
    }
  }
};

}  // namespace detail

/// Canonical labeling: label[v] is the new name of vertex v.
inline std::vector<int> canonical_labeling(const Graph& g) {
  detail::CanonicalSearch search{g, {}, {}};
  search.run(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
  return search.best_label;
}

inline CanonicalForm canonical_form(const Graph& g) {
  detail::CanonicalSearch search{g, {}, {}};
  search.run(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
  return {std::move(search.best)};
}

/// g relabeled canonically; isomorphic graphs map to equal values.
inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace biblock
