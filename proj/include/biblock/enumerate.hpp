#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "biblock/blocks.hpp"
#include "biblock/canonical.hpp"
#include "biblock/graph.hpp"
#include "biblock/independence.hpp"
#include "biblock/spectral.hpp"

namespace biblock {

inline constexpr int kMaxEnumerationOrder = 10;

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Indices are
/// handed out dynamically; the body must only write to slot i of any output.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  int workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct ClassSpec {
  int k = 2;
  std::optional<int> alpha;
};

namespace detail {

inline void require_enumerable(int k) {
  if (k < 2) throw Error(Errc::InvalidSize, "enumeration needs k >= 2");
  if (k > kMaxEnumerationOrder) {
    throw Error(Errc::TooLarge, "enumeration is limited to k <= " +
                                    std::to_string(kMaxEnumerationOrder));
  }
}

struct BlockShape {
  int a;  // side holding the attachment vertex
  int b;
};

// K_{a,b} glued to vertex `at` of g: its a-side is {at} plus new labels, its
// b-side is new labels.
inline Graph attach_block(const Graph& g, Vertex at, BlockShape shape) {
  const int k = g.order();
  VertexSet a{at}, b;
  Vertex next = k;
  for (int i = 1; i < shape.a; ++i) a.push_back(next++);
  for (int i = 0; i < shape.b; ++i) b.push_back(next++);
  auto edges = g.edges();
  auto fresh = complete_between(a, b);
  edges.insert(edges.end(), fresh.begin(), fresh.end());
  return Graph(next, edges);
}

using Level = std::vector<Graph>;

inline Level collect(std::map<CanonicalForm, Graph>& found) {
  Level out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace detail

/// Every connected bi-block graph on k vertices, one per isomorphism class,
/// canonically labeled and sorted by canonical form.
///
/// Level n holds the complete bipartite graphs on n vertices plus every graph
/// from a smaller level with one leaf block glued on. A leaf block is either
/// a single edge or K_{a,b} with a, b >= 2, since a star leaf is a bundle of
/// edge leaves.
inline std::vector<Graph> enumerate_biblock(int k, int jobs = 1) {
  detail::require_enumerable(k);
  std::vector<detail::Level> levels(static_cast<std::size_t>(k) + 1);
  for (int n = 2; n <= k; ++n) {
    std::map<CanonicalForm, Graph> found;
    for (int a = 1; 2 * a <= n; ++a) {
      Graph g = complete_bipartite(a, n - a);
      found.emplace(canonical_form(g), canonical_graph(g));
    }
    struct Task {
      const Graph* base;
      Vertex at;
      detail::BlockShape shape;
    };
    std::vector<Task> tasks;
    auto add_tasks = [&](detail::BlockShape shape) {
      int from = n - (shape.a + shape.b - 1);
      if (from < 2) return;
      for (const auto& base : levels[from])
        for (Vertex v = 0; v < base.order(); ++v) tasks.push_back({&base, v, shape});
    };
    add_tasks({1, 1});
    for (int a = 2; a < n; ++a)
      for (int b = 2; a + b - 1 <= n - 2; ++b) add_tasks({a, b});

    std::vector<std::optional<std::pair<CanonicalForm, Graph>>> made(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
      Graph g = detail::attach_block(*tasks[i].base, tasks[i].at, tasks[i].shape);
      auto labels = canonical_labeling(g);
      Graph canon = relabel(g, labels);
      made[i].emplace(canonical_form(canon), std::move(canon));
    });
    for (auto& entry : made) found.emplace(std::move(entry->first), std::move(entry->second));
    levels[n] = detail::collect(found);
  }
  return levels[k];
}

/// Members of B(k, α); all bi-block graphs on k vertices when α is absent.
inline std::vector<Graph> enumerate_class(const ClassSpec& spec, int jobs = 1) {
  auto all = enumerate_biblock(spec.k, jobs);
  if (!spec.alpha) return all;
  std::vector<Graph> out;
  for (auto& g : all)
    if (alpha_matching(g).alpha == *spec.alpha) out.push_back(std::move(g));
  return out;
}

/// Raised when a class member ties or beats K_{α,k−α}; carries that member.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& message, Graph counterexample)
      : Error(Errc::TheoremViolation, message), counterexample_(std::move(counterexample)) {}
  const Graph& counterexample() const noexcept { return counterexample_; }

 private:
  Graph counterexample_;
};

struct ExtremalReport {
  int k = 0;
  int alpha = 0;
  std::size_t class_size = 0;
  double max_rho = 0;
  CanonicalForm argmax_canonical;
  bool is_unique = false;
  /// Absent when the class has a single member.
  std::optional<double> runner_up_rho;
  std::optional<double> margin;
  double expected_rho = 0;
};

inline constexpr double kExtremalTolerance = 1e-9;

/// Extremal check over an explicit member list of B(k, α).
inline ExtremalReport extremal_report(int k, int alpha, const std::vector<Graph>& members,
                                      int jobs = 1, double tol = kDefaultTolerance) {
  if (members.empty()) {
    throw Error(Errc::InvalidArgument, "class B(" + std::to_string(k) + "," +
                                           std::to_string(alpha) + ") is empty");
  }
  std::vector<double> rho(members.size());
  parallel_for(members.size(), jobs, [&](std::size_t i) { rho[i] = perron(members[i], tol).rho; });

  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (rho[i] > rho[best]) best = i;

  ExtremalReport r;
  r.k = k;
  r.alpha = alpha;
  r.class_size = members.size();
  r.max_rho = rho[best];
  r.argmax_canonical = canonical_form(members[best]);
  r.expected_rho = std::sqrt(static_cast<double>(alpha) * (k - alpha));
  std::optional<std::size_t> second;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (i != best && (!second || rho[i] > rho[*second])) second = i;
  int ties = 0;
  for (double v : rho) ties += std::abs(v - r.max_rho) <= kExtremalTolerance ? 1 : 0;
  r.is_unique = ties == 1;
  if (second) {
    r.runner_up_rho = rho[*second];
    r.margin = r.max_rho - rho[*second];
  }

  auto tag = "B(" + std::to_string(k) + "," + std::to_string(alpha) + "): ";
  if (!is_isomorphic(members[best], complete_bipartite(alpha, k - alpha)))
    throw TheoremViolation(tag + "maximum attained off K_{alpha,k-alpha}", members[best]);
  if (std::abs(r.max_rho - r.expected_rho) > kExtremalTolerance)
    throw TheoremViolation(tag + "maximum differs from sqrt(alpha(k-alpha))", members[best]);
  if (second && !(*r.margin > kExtremalTolerance))
    throw TheoremViolation(tag + "another member ties the maximum", members[*second]);
  return r;
}

/// Spectral radius over B(k, α): the maximum must be attained exactly by
/// K_{α,k−α}, at √(α(k−α)), and strictly above every other member.
inline ExtremalReport extremal_verify(const ClassSpec& spec, int jobs = 1,
                                      double tol = kDefaultTolerance) {
  if (!spec.alpha) throw Error(Errc::InvalidArgument, "extremal check needs alpha");
  return extremal_report(spec.k, *spec.alpha, enumerate_class(spec, jobs), jobs, tol);
}

/// One report per α in [ceil(k/2), k−1] with a nonempty class.
inline std::vector<ExtremalReport> extremal_verify_all(int k, int jobs = 1,
                                                       double tol = kDefaultTolerance) {
  detail::require_enumerable(k);
  auto [lo, hi] = alpha_bounds(k);
  std::vector<std::vector<Graph>> by_alpha(static_cast<std::size_t>(k));
  for (auto& g : enumerate_biblock(k, jobs)) by_alpha[alpha_matching(g).alpha].push_back(g);
  std::vector<ExtremalReport> out;
  for (int alpha = lo; alpha <= hi; ++alpha)
    if (!by_alpha[alpha].empty()) out.push_back(extremal_report(k, alpha, by_alpha[alpha], jobs, tol));
  return out;
}

}  // namespace biblock
