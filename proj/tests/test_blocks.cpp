#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace biblock;
using support::code_of;
using support::cycle;
using support::path;

namespace {

std::vector<std::pair<int, int>> shapes(const BlockCutTree& t, const std::vector<int>& ids) {
  std::vector<std::pair<int, int>> out;
  for (int b : ids) {
    auto m = t.blocks[b].parts->m.size(), n = t.blocks[b].parts->n.size();
    out.emplace_back(std::max(m, n), std::min(m, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int block_with(const BlockCutTree& t, const VertexSet& some) {
  for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
    if (std::all_of(some.begin(), some.end(), [&](Vertex v) { return contains(t.blocks[b].vertices, v); }))
      return b;
  return -1;
}

}  // namespace

TEST(Blocks, PathOnThreeVertices) {
  auto t = decompose(path(3));
  EXPECT_EQ(t.blocks.size(), 2u);
  EXPECT_EQ(t.cut_vertices, (VertexSet{1}));
  EXPECT_EQ(block_index(t, 1), 2);
  EXPECT_EQ(block_index(t, 0), 1);
}

TEST(Blocks, SingleBlock) {
  auto t = decompose(complete_bipartite(2, 3));
  EXPECT_EQ(t.blocks.size(), 1u);
  EXPECT_TRUE(t.cut_vertices.empty());
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(block_index(t, v), 1);
  EXPECT_EQ(leaf_blocks(t), (std::vector<int>{0}));
}

TEST(Blocks, StarCenterIndex) {
  auto t = decompose(complete_bipartite(1, 5));
  EXPECT_EQ(t.blocks.size(), 5u);
  EXPECT_EQ(block_index(t, 0), 5);
}

TEST(Blocks, MixedSample) {
  Graph g = corpus::load("fig1.edges");
  auto t = decompose(g);
  EXPECT_EQ(t.blocks.size(), 8u);
  std::vector<int> all(t.blocks.size());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(shapes(t, all), (std::vector<std::pair<int, int>>{
                                {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {3, 2}, {3, 3}, {4, 3}}));
  EXPECT_EQ(block_index(t, 1), 6);
  EXPECT_EQ(leaf_blocks(t).size(), 7u);
  EXPECT_EQ(shapes(t, leaf_blocks(t)), (std::vector<std::pair<int, int>>{
                                           {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {3, 2}, {4, 3}}));
  // A brute-force leaf check: removing the block minus its cut vertex keeps the rest connected.
  for (int h : leaf_blocks(t)) EXPECT_TRUE(is_connected(peel_leaf_block(g, t, h).graph));

  int small = block_with(t, {14, 15});
  ASSERT_GE(small, 0);
  EXPECT_EQ(peel_leaf_block(g, t, small).graph.order(), 17);
  int big = block_with(t, {7, 8});
  EXPECT_EQ(code_of([&] { neighbor_union(g, t, small, big); }), Errc::NotNeighbors);
}

TEST(Blocks, IsBiBlock) {
  EXPECT_TRUE(is_bi_block(path(6)));
  EXPECT_TRUE(is_bi_block(complete_bipartite(1, 4)));
  EXPECT_FALSE(is_bi_block(cycle(6)));
  EXPECT_TRUE(is_bi_block(cycle(4)));
  EXPECT_FALSE(is_bi_block(cycle(3)));
  EXPECT_FALSE(is_bi_block(Graph(4, {{0, 1}, {2, 3}})));
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_bi_block(complete_bipartite(m, n)));
}

TEST(Blocks, RandomTreesAreBiBlock) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial)
    EXPECT_TRUE(is_bi_block(oracle::random_connected_bipartite(2 + trial % 20, 0.0, rng)));
}

TEST(Blocks, PathLeaves) {
  auto t = decompose(path(4));
  auto leaves = leaf_blocks(t);
  ASSERT_EQ(leaves.size(), 2u);
  for (int h : leaves) {
    const auto& vs = t.blocks[h].vertices;
    EXPECT_TRUE(contains(vs, 0) || contains(vs, 3));
  }
}

TEST(Blocks, NeighborUnion) {
  Graph p3 = path(3);
  auto t = decompose(p3);
  EXPECT_EQ(neighbor_union(p3, t, 0, 1).graph.edges(), p3.edges());
  Graph two = build_two_block(2, 2, 2, 2);
  auto t2 = decompose(two);
  ASSERT_EQ(t2.blocks.size(), 2u);
  auto u = neighbor_union(two, t2, 0, 1).graph;
  EXPECT_EQ(u.order(), 7);
  EXPECT_EQ(u.size(), 8u);
}

TEST(Blocks, Peel) {
  Graph p3 = path(3);
  auto t = decompose(p3);
  auto peeled = peel_leaf_block(p3, t, 0);
  EXPECT_EQ(peeled.graph.order(), 2);
  EXPECT_EQ(peeled.graph.size(), 1u);
  Graph two = build_two_block(2, 2, 2, 2);
  auto t2 = decompose(two);
  EXPECT_TRUE(is_isomorphic(peel_leaf_block(two, t2, 1).graph, complete_bipartite(2, 2)));
  EXPECT_EQ(code_of([] { peel_leaf_block(cycle(4), decompose(cycle(4)), 0); }), Errc::SingleBlock);
  Graph p5 = path(5);
  auto t5 = decompose(p5);
  int middle = block_with(t5, {1, 2});
  EXPECT_EQ(code_of([&] { peel_leaf_block(p5, t5, middle); }), Errc::NotLeaf);
}

TEST(Blocks, PropertiesOnCorpus) {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs;
  for (int k = 2; k <= 8; ++k)
    for (const auto& g : corpus::enumerated(k)) graphs.push_back(g);
  for (int i = 0; i < 200; ++i) graphs.push_back(oracle::random_biblock(4 + i % 16, rng));
  for (int i = 0; i < 100; ++i) graphs.push_back(oracle::random_connected_bipartite(4 + i % 12, 0.3, rng));
  graphs.push_back(corpus::load("fig1.edges"));
  for (const auto& g : graphs) {
    auto t = decompose(g);
    std::size_t edges = 0;
    for (const auto& b : t.blocks) edges += b.edges.size();
    EXPECT_EQ(edges, g.size());
    auto cuts = oracle::cut_vertices(g);
    EXPECT_EQ(t.cut_vertices, cuts);
    for (Vertex v = 0; v < g.order(); ++v)
      EXPECT_EQ(block_index(t, v) >= 2, contains(cuts, v));
    if (!is_bi_block(g) || t.blocks.size() < 2) continue;
    for (int h : leaf_blocks(t)) {
      auto rest = peel_leaf_block(g, t, h).graph;
      EXPECT_TRUE(is_connected(rest));
      EXPECT_TRUE(is_bi_block(rest));
    }
  }
}

TEST(Blocks, StructureMergesPieces) {
  auto s = BlockStructure::standard(complete_bipartite(1, 3));
  EXPECT_EQ(s.block_count(), 3);
  EXPECT_EQ(s.index(0), 3);
  VertexSet leaves;
  for (int id : {0, 1})
    for (Vertex v : s.piece(id).vertices)
      if (v != 0) leaves.push_back(v);
  std::sort(leaves.begin(), leaves.end());
  auto merged = s.merged(0, 1, {0}, leaves);
  EXPECT_EQ(merged.block_count(), 2);
  EXPECT_EQ(merged.index(0), 2);
  EXPECT_EQ(code_of([] {
              BlockStructure::from_pieces(support::cycle(4), {{{0}, {1}}, {{1, 3}, {2}}});
            }),
            Errc::InvalidArgument);
}
