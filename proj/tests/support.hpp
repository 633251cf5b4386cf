#pragma once

#include <gtest/gtest.h>

#include <vector>

#include "biblock/biblock.hpp"

namespace support {

template <class Fn>
biblock::Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const biblock::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return biblock::Errc::InvalidArgument;
}

inline biblock::Graph path(int k) {
  std::vector<biblock::Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return biblock::Graph(k, edges);
}

inline biblock::Graph cycle(int k) {
  std::vector<biblock::Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return biblock::Graph(k, edges);
}

// Pieces glued in a chain: piece i+1 meets piece i at one vertex of its
// second side, taken on the first side of piece i+1.
inline biblock::Graph chain(const std::vector<std::pair<int, int>>& shapes) {
  std::vector<biblock::Edge> edges;
  biblock::Vertex next = 0, at = -1;
  for (auto [a, b] : shapes) {
    biblock::VertexSet sa, sb;
    if (at >= 0) sa.push_back(at);
    while (static_cast<int>(sa.size()) < a) sa.push_back(next++);
    for (int i = 0; i < b; ++i) sb.push_back(next++);
    auto fresh = biblock::complete_between(sa, sb);
    edges.insert(edges.end(), fresh.begin(), fresh.end());
    at = sb.back();
  }
  return biblock::Graph(next, edges);
}

}  // namespace support
