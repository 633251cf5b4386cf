#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace biblock;
using support::code_of;

namespace {

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const auto& g : graphs) out.insert(canonical_form(g));
  return out;
}

bool has_member(const std::vector<Graph>& graphs, const Graph& h) {
  return std::any_of(graphs.begin(), graphs.end(), [&](const Graph& g) { return is_isomorphic(g, h); });
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_biblock(2).size(), 1u);
  EXPECT_EQ(enumerate_biblock(3).size(), 1u);
  EXPECT_TRUE(is_isomorphic(enumerate_biblock(3)[0], support::path(3)));
}

// Counts frozen after agreement with the all-subsets oracle.
TEST(Enumerate, FrozenCounts) {
  const std::vector<std::size_t> expected{0, 0, 1, 1, 3, 5, 14, 33, 94};
  for (int k = 2; k <= 8; ++k) EXPECT_EQ(corpus::enumerated(k).size(), expected[k]) << k;
}

TEST(Enumerate, AgreesWithAllSubsetsOracle) {
  for (int k = 2; k <= 7; ++k) EXPECT_EQ(forms_of(corpus::enumerated(k)), oracle::all_biblock_forms(k)) << k;
}

TEST(Enumerate, MembersAreCanonicalSortedAndValid) {
  for (int k = 2; k <= 9; ++k) {
    const auto& all = corpus::enumerated(k);
    auto [lo, hi] = alpha_bounds(k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& g = all[i];
      EXPECT_EQ(g.order(), k);
      EXPECT_TRUE(is_bi_block(g));
      EXPECT_TRUE(is_bipartite(g));
      EXPECT_EQ(canonical_graph(g).edges(), g.edges());
      int a = alpha_matching(g).alpha;
      EXPECT_GE(a, lo);
      EXPECT_LE(a, hi);
      if (i > 0) {
        EXPECT_LT(canonical_form(all[i - 1]), canonical_form(g));
      }
    }
  }
}

TEST(Enumerate, ParallelMatchesSerial) {
  auto serial = enumerate_biblock(8, 1);
  auto parallel = enumerate_biblock(8, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial[i].edges(), parallel[i].edges());
}

TEST(Enumerate, Limits) {
  EXPECT_EQ(code_of([] { enumerate_biblock(11); }), Errc::TooLarge);
  EXPECT_EQ(code_of([] { enumerate_biblock(1); }), Errc::InvalidSize);
}

TEST(EnumerateClass, Examples) {
  auto four = enumerate_class({4, 3});
  EXPECT_TRUE(has_member(four, complete_bipartite(1, 3)));
  EXPECT_FALSE(has_member(four, support::path(4)));
  EXPECT_TRUE(has_member(enumerate_class({6, 3}), complete_bipartite(3, 3)));
  EXPECT_TRUE(enumerate_class({5, 2}).empty());
  auto k5a4 = enumerate_class({5, 4});
  ASSERT_EQ(k5a4.size(), 1u);
  EXPECT_TRUE(is_isomorphic(k5a4[0], complete_bipartite(1, 4)));
}

TEST(EnumerateClass, ClassesPartitionTheEnumeration) {
  for (int k = 2; k <= 9; ++k) {
    auto [lo, hi] = alpha_bounds(k);
    std::size_t total = 0;
    for (int a = lo; a <= hi; ++a) total += enumerate_class({k, a}).size();
    EXPECT_EQ(total, corpus::enumerated(k).size()) << k;
  }
}

TEST(Extremal, Examples) {
  auto r = extremal_verify({6, 4});
  EXPECT_NEAR(r.max_rho, std::sqrt(8.0), 1e-9);
  EXPECT_EQ(r.argmax_canonical, canonical_form(complete_bipartite(4, 2)));
  EXPECT_EQ(r.class_size, 7u);
  auto seven = extremal_verify({7, 4});
  EXPECT_NEAR(seven.max_rho, std::sqrt(12.0), 1e-9);
  EXPECT_TRUE(seven.is_unique);
  auto five = extremal_verify({5, 4});
  EXPECT_EQ(five.class_size, 1u);
  EXPECT_NEAR(five.max_rho, 2.0, 1e-9);
  EXPECT_FALSE(five.runner_up_rho.has_value());
  EXPECT_EQ(code_of([] { extremal_verify({5, 2}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { extremal_verify({5, std::nullopt}); }), Errc::InvalidArgument);
}

TEST(Extremal, ViolationCarriesCounterexample) {
  std::vector<Graph> wrong{support::path(4)};
  try {
    extremal_report(4, 3, wrong);
    FAIL() << "expected a violation";
  } catch (const TheoremViolation& e) {
    EXPECT_EQ(e.code(), Errc::TheoremViolation);
    EXPECT_EQ(e.counterexample().edges(), support::path(4).edges());
  }
}

TEST(Extremal, DeskScaleUpToNine) {
  for (int k = 2; k <= 9; ++k) {
    auto reports = extremal_verify_all(k, 0);
    for (const auto& r : reports) {
      EXPECT_NEAR(r.max_rho, r.expected_rho, 1e-9);
      EXPECT_EQ(r.argmax_canonical, canonical_form(complete_bipartite(r.alpha, k - r.alpha)));
      if (r.class_size > 1) {
        ASSERT_TRUE(r.margin.has_value());
        EXPECT_GT(*r.margin, 1e-9);
        EXPECT_TRUE(r.is_unique);
      }
    }
  }
}
