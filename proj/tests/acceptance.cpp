// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "biblock/biblock.hpp"
#include "oracles.hpp"

using namespace biblock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Graph> enumeration_up_to(int k_max) {
  std::vector<Graph> out;
  for (int k = 2; k <= k_max; ++k)
    for (auto& g : enumerate_biblock(k, 0)) out.push_back(std::move(g));
  return out;
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome closed_form() {
  double worst = 0;
  bool strict = true;
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
          double closed = two_block_rho(p, q, m, n);
          worst = std::max(worst, std::abs(closed - perron(build_two_block(p, q, m, n)).rho));
          strict = strict && closed > std::sqrt(p * q * 1.0) && closed > std::sqrt(m * n * 1.0);
        }
  return {worst < 1e-9 && strict, fmt("1296 instances, max |diff| %.3g", worst)};
}

Outcome identities(const std::vector<Graph>& upto8) {
  double two = 0, leaf = 0;
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
          auto l = two_block_layout(p, q, m, n);
          auto r = check_two_block_identities(extract_two_block_data(l, perron(build_two_block(l))));
          two = std::max(two, r.max_residual());
        }
  long configs = 0;
  for (const auto& g : upto8) {
    auto pair = perron(g);
    for (const auto& cfg : leaf_configurations(BlockStructure::standard(g))) {
      leaf = std::max(leaf, check_leaf_identities(extract_leaf_data(cfg, pair)).max_residual());
      ++configs;
    }
  }
  return {two < 1e-9 && leaf < 1e-9 && configs > 0,
          fmt("two-block max %.3g, leaf max %.3g over %.0f configurations", two, leaf, configs)};
}

Outcome extremal() {
  int classes = 0;
  try {
    for (int k = 2; k <= 9; ++k) {
      for (const auto& r : extremal_verify_all(k, 0)) {
        ++classes;
        bool ok = std::abs(r.max_rho - std::sqrt(1.0 * r.alpha * (k - r.alpha))) <= 1e-9 &&
                  r.argmax_canonical == canonical_form(complete_bipartite(r.alpha, k - r.alpha)) &&
                  (r.class_size == 1 || (r.margin && *r.margin > 1e-9));
        if (!ok) return {false, "B(" + std::to_string(k) + "," + std::to_string(r.alpha) + ")"};
      }
    }
  } catch (const TheoremViolation& e) {
    return {false, e.what()};
  }
  return {true, std::to_string(classes) + " classes for k = 2..9"};
}

Outcome alpha_oracle(const std::vector<Graph>& upto9) {
  long mismatches = 0;
  for (const auto& g : upto9) mismatches += alpha_matching(g).alpha != alpha_bruteforce(g).alpha;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int i = 0; i < 1000; ++i) {
    Graph g = oracle::random_connected_bipartite(2 + i % 15, density(rng), rng);
    mismatches += alpha_matching(g).alpha != alpha_bruteforce(g).alpha;
  }
  return {mismatches == 0, std::to_string(upto9.size()) + " enumerated + 1000 random, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome leaf_dichotomy(const std::vector<Graph>& upto9) {
  long leaves = 0, violations = 0;
  for (const auto& g : upto9) {
    if (decompose(g).blocks.size() < 2) continue;
    for (const auto& e : verify_leaf_alpha_dichotomy(g).entries) {
      ++leaves;
      violations += !e.holds;
    }
  }
  return {violations == 0,
          std::to_string(leaves) + " leaf blocks, " + std::to_string(violations) + " violations"};
}

Outcome rewrites(const std::vector<Graph>& upto8) {
  long steps = 0;
  std::string failure;
  auto check = [&](const Graph& g, const BlockStructure& s, const RewriteStep& step) {
    try {
      auto o = apply(g, s, step);
      double x = quad_form_delta(g, o.result, perron(g).vector);
      bool ok = o.result.order() == g.order() && alpha_matching(o.result).alpha == alpha_matching(g).alpha &&
                perron(o.result).rho >= perron(g).rho - 1e-10 && x >= -1e-10;
      if (!ok && failure.empty()) failure = step.case_label + " on\n" + format_edge_list(g);
      ++steps;
    } catch (const Error& e) {
      if (failure.empty()) failure = std::string(e.what()) + " on\n" + format_edge_list(g);
    }
  };
  for (const auto& g : upto8) {
    auto s = BlockStructure::standard(g);
    for (const auto& witness : maximum_independent_sets(g))
      for (const auto& step : find_applicable(g, s, witness)) check(g, s, step);
  }
  double worst = 0;
  int instances = 0;
  for (int p = 1; p <= 6; ++p)
    for (int q = p + 2; q <= 6; ++q)
      for (int m = 1; m <= 6; ++m)
        for (int n = m + 1; n <= 6; ++n) {
          auto l = two_block_layout(p, q, m, n);
          Graph g = build_two_block(l);
          auto pair = perron(g);
          auto o = reattach_cut_vertex(g, two_block_structure(l), 0, 1);
          double a_p = pair.vector[l.P[0]];
          worst = std::max(worst, std::abs(o.quad_delta / (a_p * a_p) -
                                           reattach_closed_form_delta(p, q, m, n, pair.rho)));
          ++instances;
        }
  bool pass = failure.empty() && worst < 1e-8;
  std::string detail = std::to_string(steps) + " steps; closed form max |diff| " +
                       fmt("%.3g", worst) + " over " + std::to_string(instances) + " instances";
  if (!failure.empty()) detail += "; first failure: " + failure;
  return {pass, detail};
}

Outcome normalization(const std::vector<Graph>& upto8) {
  long total_steps = 0;
  for (const auto& g : upto8) {
    try {
      auto r = normalize(g);
      int alpha = alpha_matching(g).alpha;
      if (!is_isomorphic(r.result, complete_bipartite(alpha, g.order() - alpha)) ||
          static_cast<int>(r.trace.size()) > r.step_bound)
        return {false, format_edge_list(g)};
      double rho = perron(g).rho;
      for (const auto& o : r.trace) {
        if (o.rho_after < rho - 1e-10) return {false, "rho decreased on\n" + format_edge_list(g)};
        rho = o.rho_after;
      }
      total_steps += static_cast<long>(r.trace.size());
    } catch (const Error& e) {
      return {false, std::string(e.what()) + " on\n" + format_edge_list(g)};
    }
  }
  return {true, std::to_string(upto8.size()) + " graphs, " + std::to_string(total_steps) + " steps"};
}

Outcome classical_bounds(const std::vector<Graph>& upto9) {
  long bad = 0;
  for (const auto& g : upto9) {
    double rho = perron(g).rho;
    bad += rho < min_degree(g) - 1e-9 || rho > max_degree(g) + 1e-9;
  }
  std::mt19937_64 rng(42);
  std::vector<const Graph*> pool;
  for (const auto& g : upto9)
    if (!oracle::non_edges(g).empty()) pool.push_back(&g);
  double smallest = 1e9;
  for (int i = 0; i < 200; ++i) {
    const Graph& g = *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    auto missing = oracle::non_edges(g);
    auto [u, w] = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
    auto r = edge_monotonicity_check(g, u, w);
    smallest = std::min(smallest, r.increase);
    bad += !r.holds;
  }
  return {bad == 0, fmt("degree bounds on %.0f graphs; 200 edge samples, min increase %.3g",
                         static_cast<double>(upto9.size()), smallest)};
}

Outcome dual_path() {
  for (int k = 2; k <= 7; ++k) {
    std::set<CanonicalForm> tree;
    for (const auto& g : enumerate_biblock(k, 0)) tree.insert(canonical_form(g));
    if (tree != oracle::all_biblock_forms(k)) return {false, "k=" + std::to_string(k)};
  }
  return {true, "k = 2..7 identical"};
}

}  // namespace

int main() {
  auto upto8 = enumeration_up_to(8);
  auto upto9 = enumeration_up_to(9);
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"closed-form two-block radius", closed_form},
      {"eigenvector identities", [&] { return identities(upto8); }},
      {"extremal theorem k <= 9", extremal},
      {"independence oracle equivalence", [&] { return alpha_oracle(upto9); }},
      {"leaf-block alpha dichotomy", [&] { return leaf_dichotomy(upto9); }},
      {"rewrite monotonicity and preservation", [&] { return rewrites(upto8); }},
      {"normalization to K_{alpha,k-alpha}", [&] { return normalization(upto8); }},
      {"degree bounds and edge monotonicity", [&] { return classical_bounds(upto9); }},
      {"dual-path enumeration", dual_path},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
