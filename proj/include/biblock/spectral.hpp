#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "biblock/blocks.hpp"
#include "biblock/graph.hpp"

namespace biblock {

enum class Normalization { UnitNorm, Anchored };

inline std::string to_string(Normalization n) {
  return n == Normalization::UnitNorm ? "unit_norm" : "anchored";
}

/// Spectral radius and entrywise-positive eigenvector of a connected graph.
struct PerronPair {
  double rho = 0;
  std::vector<double> vector;
  Normalization normalization = Normalization::UnitNorm;
  int iterations = 0;
  /// ‖AX − ρX‖∞ for the stored vector.
  double residual = 0;
};

inline constexpr double kDefaultTolerance = 1e-12;

inline std::vector<double> multiply(const Graph& g, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (auto [u, w] : g.edges()) {
    y[u] += x[w];
    y[w] += x[u];
  }
  return y;
}

/// Power iteration on A + I from the all-ones vector.
///
/// A bipartite spectrum is symmetric, so on A itself ρ and −ρ tie for the
/// dominant magnitude and the iterates oscillate. The unit shift makes ρ + 1
/// strictly dominant. Stops once ‖(A+I)X − λX‖∞ ≤ tol·λ.
inline PerronPair perron(const Graph& g, double tol = kDefaultTolerance) {
  const int k = g.order();
  if (k < 2) throw Error(Errc::InvalidSize, "spectral radius needs at least two vertices");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "Perron vector needs a connected graph");
  if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");

  const long cap = 200L * k * k;
  std::vector<double> x(static_cast<std::size_t>(k), 1.0 / std::sqrt(static_cast<double>(k)));
  for (long it = 1; it <= cap; ++it) {
    auto y = multiply(g, x);
    double lambda = 0;
    for (int i = 0; i < k; ++i) {
      y[i] += x[i];
      lambda += x[i] * y[i];
    }
    double worst = 0;
    for (int i = 0; i < k; ++i) worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
    if (worst <= tol * lambda) {
      PerronPair pair;
      pair.rho = lambda - 1.0;
      pair.vector = std::move(x);
      pair.iterations = static_cast<int>(it);
      pair.residual = worst;
      if (std::any_of(pair.vector.begin(), pair.vector.end(), [](double v) { return v <= 0; }))
        throw Error(Errc::NoConvergence, "iterate lost positivity");
      return pair;
    }
    double norm = 0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (int i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  throw Error(Errc::NoConvergence, "power iteration hit the cap of " + std::to_string(cap) +
                                       " iterations");
}

/// Copy of the pair rescaled so that entry `v` equals 1.
inline PerronPair anchored(const PerronPair& pair, Vertex v) {
  if (v < 0 || v >= static_cast<int>(pair.vector.size()))
    throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
  PerronPair out = pair;
  double scale = pair.vector[v];
  for (double& e : out.vector) e /= scale;
  out.residual /= scale;
  out.normalization = Normalization::Anchored;
  return out;
}

/// 2·Σ_{uw ∈ E} x_u x_w / Σ x_u².
inline double rayleigh(const Graph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.order())
    throw Error(Errc::SizeMismatch, "vector length differs from vertex count");
  double den = 0;
  for (double v : x) den += v * v;
  if (den == 0) throw Error(Errc::ZeroVector, "Rayleigh quotient of the zero vector");
  double num = 0;
  for (auto [u, w] : g.edges()) num += 2 * x[u] * x[w];
  return num / den;
}

inline void require_sizes(int p, int q, int m, int n) {
  if (p < 1 || q < 1 || m < 1 || n < 1) {
    throw Error(Errc::InvalidSize, "part sizes must be >= 1, got " + std::to_string(p) + "," +
                                       std::to_string(q) + "," + std::to_string(m) + "," +
                                       std::to_string(n));
  }
}

/// ρ of K(P,Q) and K(M,N) glued at the single vertex of Q ∩ M.
inline double two_block_rho(int p, int q, int m, int n) {
  require_sizes(p, q, m, n);
  double pq = static_cast<double>(p) * q;
  double mn = static_cast<double>(m) * n;
  double rho = std::sqrt((pq + mn + std::sqrt((pq - mn) * (pq - mn) + 4.0 * p * n)) / 2.0);
  if (!(rho > std::sqrt(pq) && rho > std::sqrt(mn))) {
    throw Error(Errc::PostconditionFailed, "two-block radius does not exceed both block radii");
  }
  return rho;
}

/// Labels of the two-block graph: P first, then Q with v last, then M∖{v}, then N.
struct TwoBlockLayout {
  int p, q, m, n;
  VertexSet P, Q, M, N;  // Q and M both contain v
  Vertex v;
  int order() const { return p + q + m + n - 1; }
};

inline TwoBlockLayout two_block_layout(int p, int q, int m, int n) {
  require_sizes(p, q, m, n);
  TwoBlockLayout l{p, q, m, n, {}, {}, {}, {}, p + q - 1};
  Vertex next = 0;
  for (int i = 0; i < p; ++i) l.P.push_back(next++);
  for (int i = 0; i < q; ++i) l.Q.push_back(next++);
  l.M.push_back(l.v);
  for (int i = 1; i < m; ++i) l.M.push_back(next++);
  for (int i = 0; i < n; ++i) l.N.push_back(next++);
  return l;
}

inline Graph build_two_block(const TwoBlockLayout& l) {
  auto edges = complete_between(l.P, l.Q);
  auto more = complete_between(l.M, l.N);
  edges.insert(edges.end(), more.begin(), more.end());
  return Graph(l.order(), edges);
}

inline Graph build_two_block(int p, int q, int m, int n) {
  return build_two_block(two_block_layout(p, q, m, n));
}

/// The two pieces K(P,Q) and K(M,N), even when a star splits into several blocks.
inline BlockStructure two_block_structure(const TwoBlockLayout& l) {
  return BlockStructure::from_pieces(build_two_block(l), {{l.P, l.Q}, {l.M, l.N}});
}

/// Entry values of the Perron vector on the classes P, Q∖{v}, M∖{v}, N and v.
struct TwoBlockEigenData {
  int p, q, m, n;
  double rho;
  double a_p, a_q, a_m, a_n, x_v;
};

namespace detail {

inline double class_value(const std::vector<double>& x, const VertexSet& cls, Vertex skip,
                          double tol, const char* name) {
  double lo = 0, hi = 0, sum = 0;
  int count = 0;
  for (Vertex u : cls) {
    if (u == skip) continue;
    double e = x.at(u);
    lo = count == 0 ? e : std::min(lo, e);
    hi = count == 0 ? e : std::max(hi, e);
    sum += e;
    ++count;
  }
  if (count == 0) return std::nan("");
  if (hi - lo > tol) {
    throw Error(Errc::NotConstantWithinClass,
                std::string("entries on ") + name + " spread by " + std::to_string(hi - lo));
  }
  return sum / count;
}

}  // namespace detail

/// Reads the class constants off a Perron vector.
///
/// An empty class (q = 1 or m = 1) gets x_v minus the other half of the cut
/// entry; when both are empty a_q is fixed by p·a_p = ρ·a_q.
inline TwoBlockEigenData extract_two_block_data(const TwoBlockLayout& l, const PerronPair& pair,
                                                double tol = 1e-9) {
  if (static_cast<int>(pair.vector.size()) != l.order())
    throw Error(Errc::SizeMismatch, "Perron vector does not match the layout");
  const auto& x = pair.vector;
  TwoBlockEigenData d{l.p, l.q, l.m, l.n, pair.rho, 0, 0, 0, 0, x[l.v]};
  d.a_p = detail::class_value(x, l.P, -1, tol, "P");
  d.a_n = detail::class_value(x, l.N, -1, tol, "N");
  if (l.q >= 2) d.a_q = detail::class_value(x, l.Q, l.v, tol, "Q");
  if (l.m >= 2) d.a_m = detail::class_value(x, l.M, l.v, tol, "M");
  if (l.q == 1 && l.m == 1) d.a_q = l.p * d.a_p / d.rho;
  if (l.m == 1) d.a_m = d.x_v - d.a_q;
  if (l.q == 1) d.a_q = d.x_v - d.a_m;
  return d;
}

struct IdentityResidual {
  std::string name;
  double residual;
};

struct IdentityReport {
  std::vector<IdentityResidual> residuals;
  double threshold = 0;

  double max_residual() const {
    double worst = 0;
    for (const auto& r : residuals) worst = std::max(worst, std::abs(r.residual));
    return worst;
  }
  bool ok() const { return max_residual() < threshold; }
};

inline constexpr double kIdentityTolerance = 1e-9;

inline double scaled_threshold(double base, double rho) { return base * std::max(1.0, rho); }

inline IdentityReport check_two_block_identities(const TwoBlockEigenData& d,
                                                 double base = kIdentityTolerance) {
  const double r = d.rho, r2 = r * r;
  const double p = d.p, q = d.q, m = d.m, n = d.n;
  IdentityReport rep;
  rep.threshold = scaled_threshold(base, r);
  auto add = [&](const char* name, double value) { rep.residuals.push_back({name, value}); };
  add("eigen_eq_P", (q - 1) * d.a_q + d.x_v - r * d.a_p);
  add("eigen_eq_Q", p * d.a_p - r * d.a_q);
  add("eigen_eq_cut", p * d.a_p + n * d.a_n - r * d.x_v);
  add("eigen_eq_M", n * d.a_n - r * d.a_m);
  add("eigen_eq_N", d.x_v + (m - 1) * d.a_m - r * d.a_n);
  add("cut_entry_split", d.x_v - (d.a_q + d.a_m));
  add("eigen_eq_P_reduced", q * d.a_q + d.a_m - r * d.a_p);
  add("eigen_eq_N_reduced", d.a_q + m * d.a_m - r * d.a_n);
  {
    double s = 1.0 / d.a_p;
    double worst = std::max({std::abs(d.a_q * s - p / r), std::abs(d.a_m * s - (r2 - p * q) / r),
                             std::abs(d.a_n * s - (r2 - p * q) / n)});
    add("anchored_at_P", worst);
  }
  {
    double s = 1.0 / d.a_n;
    double worst = std::max({std::abs(d.a_m * s - n / r), std::abs(d.a_q * s - (r2 - m * n) / r),
                             std::abs(d.a_p * s - (r2 - m * n) / p)});
    add("anchored_at_N", worst);
  }
  add("characteristic_quartic", p * n - (r2 - p * q) * (r2 - m * n));
  return rep;
}

/// A leaf piece H = K(M,N) at cut vertex v, its neighbor F = K(P,Q) with
/// Q ∩ M = {v}, and a vertex c ∈ Q lying in no other piece.
struct LeafConfiguration {
  int leaf;
  int neighbor;
  Vertex cut;
  Vertex c;
  VertexSet P, Q, M, N;
};

/// Configurations at leaf h, one per admissible c; empty when h is not a leaf
/// meeting its neighbor at a vertex of index 2, or when Q∖{v} has only cut vertices.
inline std::vector<LeafConfiguration> leaf_configurations_at(const BlockStructure& s, int h) {
  std::vector<LeafConfiguration> out;
  if (s.block_count() < 2) return out;
  auto cuts = s.cut_vertices_of(h);
  if (cuts.size() != 1) return out;
  Vertex v = cuts.front();
  if (s.index(v) != 2) return out;
  int f = s.other_block_at(v, h);
  auto [Q, P] = s.sides_facing(f, v);
  auto [M, N] = s.sides_facing(h, v);
  for (Vertex c : Q) {
    if (c == v || s.is_cut_vertex(c)) continue;
    out.push_back({h, f, v, c, P, Q, M, N});
  }
  return out;
}

inline std::vector<LeafConfiguration> leaf_configurations(const BlockStructure& s) {
  std::vector<LeafConfiguration> out;
  for (int h : s.leaves()) {
    auto here = leaf_configurations_at(s, h);
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

/// First configuration at leaf h (smallest c).
inline LeafConfiguration leaf_configuration(const BlockStructure& s, int h) {
  auto all = leaf_configurations_at(s, h);
  if (all.empty()) {
    throw Error(Errc::NoSuchConfiguration,
                "piece " + std::to_string(h) + " has no leaf configuration with a non-cut c");
  }
  return all.front();
}

struct LeafEigenData {
  int m, n;
  double rho;
  double b_m, b_n, x_v, x_c, sum_p;
};

inline LeafEigenData extract_leaf_data(const LeafConfiguration& cfg, const PerronPair& pair,
                                       double tol = 1e-9) {
  const auto& x = pair.vector;
  LeafEigenData d{static_cast<int>(cfg.M.size()), static_cast<int>(cfg.N.size()), pair.rho,
                  0, 0, x.at(cfg.cut), x.at(cfg.c), 0};
  d.b_n = detail::class_value(x, cfg.N, -1, tol, "N");
  d.b_m = d.m >= 2 ? detail::class_value(x, cfg.M, cfg.cut, tol, "M") : d.x_v - d.x_c;
  for (Vertex w : cfg.P) d.sum_p += x[w];
  return d;
}

inline IdentityReport check_leaf_identities(const LeafEigenData& d,
                                            double base = kIdentityTolerance) {
  const double r = d.rho, m = d.m, n = d.n;
  IdentityReport rep;
  rep.threshold = scaled_threshold(base, r);
  auto add = [&](const char* name, double value) { rep.residuals.push_back({name, value}); };
  add("eigen_eq_c", r * d.x_c - d.sum_p);
  add("eigen_eq_cut", r * d.x_v - d.sum_p - n * d.b_n);
  add("eigen_eq_N", r * d.b_n - (m - 1) * d.b_m - d.x_v);
  add("eigen_eq_M", r * d.b_m - n * d.b_n);
  add("eigen_eq_N_reduced", r * d.b_n - m * d.b_m - d.x_c);
  add("cut_entry_split", d.x_v - d.x_c - d.b_m);
  return rep;
}

inline IdentityReport check_leaf_identities(const Graph& g, const LeafConfiguration& cfg,
                                            double tol = kDefaultTolerance,
                                            double base = kIdentityTolerance) {
  return check_leaf_identities(extract_leaf_data(cfg, perron(g, tol)), base);
}

struct DegreeBounds {
  int delta;
  double rho;
  int Delta;
};

/// (δ, ρ, Δ); throws if ρ falls outside [δ, Δ] beyond 1e-9.
inline DegreeBounds degree_bounds(const Graph& g, double tol = kDefaultTolerance) {
  DegreeBounds b{min_degree(g), perron(g, tol).rho, max_degree(g)};
  if (b.rho < b.delta - 1e-9 || b.rho > b.Delta + 1e-9)
    throw Error(Errc::PostconditionFailed, "spectral radius outside the degree range");
  return b;
}

/// ½·Xᵗ(A* − A)X, summed over added and deleted edges only.
inline double quad_form_delta(const Graph& g, const Graph& g_star, const std::vector<double>& x) {
  if (g.order() != g_star.order() || static_cast<int>(x.size()) != g.order())
    throw Error(Errc::SizeMismatch, "graphs and vector must share one vertex set");
  double delta = 0;
  for (auto [u, w] : g_star.edges())
    if (!g.has_edge(u, w)) delta += x[u] * x[w];
  for (auto [u, w] : g.edges())
    if (!g_star.has_edge(u, w)) delta -= x[u] * x[w];
  return delta;
}

/// Closed form of ½·Xᵗ(A* − A)X for the cut-vertex reattachment of a
/// two-block graph, with X anchored so that the P entries equal 1.
inline double reattach_closed_form_delta(int p, int q, int m, int n, double rho) {
  double r2 = rho * rho;
  return p * (r2 - static_cast<double>(p) * q) / (rho * n) *
         (rho * (q + n - 1) - r2 + static_cast<double>(n) * (m - 1));
}

struct MonotonicityReport {
  double rho_before;
  double rho_after;
  double increase;
  bool holds;
};

inline constexpr double kStrictMargin = 1e-10;

/// ρ(G + uv) − ρ(G) must exceed the margin.
inline MonotonicityReport edge_monotonicity_check(const Graph& g, Vertex u, Vertex v,
                                                  double tol = kDefaultTolerance) {
  Graph h = add_edge(g, u, v);
  double before = perron(g, tol).rho;
  double after = perron(h, tol).rho;
  return {before, after, after - before, after - before > kStrictMargin};
}

}  // namespace biblock
