#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "biblock/blocks.hpp"
#include "biblock/enumerate.hpp"
#include "biblock/graph.hpp"
#include "biblock/independence.hpp"
#include "biblock/rewrite.hpp"
#include "biblock/spectral.hpp"

namespace biblock {

using json = nlohmann::ordered_json;

/// x rounded to 12 significant digits, so serialized reals stay stable.
inline double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline json edge_array(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

inline json to_json(const Graph& g) { return {{"k", g.order()}, {"edges", edge_array(g.edges())}}; }

inline Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("k").get<int>(), edges);
}

inline json to_json(const BlockCutTree& t) {
  json blocks = json::array();
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    const auto& b = t.blocks[i];
    json entry{{"id", i}, {"vertices", b.vertices}, {"edge_count", b.edges.size()}};
    if (b.parts) {
      entry["parts"] = {b.parts->m, b.parts->n};
      entry["part_sizes"] = {b.parts->m.size(), b.parts->n.size()};
    } else {
      entry["parts"] = nullptr;
      entry["part_sizes"] = nullptr;
    }
    blocks.push_back(std::move(entry));
  }
  std::vector<int> index;
  for (const auto& ids : t.incidence) index.push_back(static_cast<int>(ids.size()));
  return {{"blocks", blocks},
          {"cut_vertices", t.cut_vertices},
          {"block_index", index},
          {"leaf_blocks", leaf_blocks(t)}};
}

inline json to_json(const IdentityReport& r) {
  json residuals = json::object();
  for (const auto& e : r.residuals) residuals[e.name] = round12(e.residual);
  return {{"threshold", round12(r.threshold)},
          {"max_residual", round12(r.max_residual())},
          {"ok", r.ok()},
          {"residuals", residuals}};
}

inline json to_json(const RewriteStep& s) {
  json out{{"kind", to_string(s.kind)},
           {"case", s.case_label},
           {"blocks", {s.first, s.second}},
           {"vertex", s.vertex},
           {"orientation", to_string(s.orientation)}};
  if (s.kind == RewriteKind::SplitPartition) out["n1"] = s.n1;
  return out;
}

inline json to_json(const RewriteOutcome& o) {
  json out = to_json(o.step);
  out["rho_before"] = round12(o.rho_before);
  out["rho_after"] = round12(o.rho_after);
  out["delta_rho"] = round12(o.delta_rho);
  out["quad_delta"] = round12(o.quad_delta);
  out["alpha_before"] = o.alpha_before;
  out["alpha_after"] = o.alpha_after;
  out["changes_graph"] = o.changes_graph;
  out["removed"] = edge_array(o.removed);
  out["added"] = edge_array(o.added);
  out["trace"] = o.trace;
  out["result"] = to_json(o.result);
  return out;
}

inline json to_json(const NormalizeResult& r) {
  json trace = json::array();
  for (const auto& o : r.trace) trace.push_back(to_json(o));
  return {{"alpha", r.alpha},
          {"initial_blocks", r.initial_blocks},
          {"step_bound", r.step_bound},
          {"steps", r.trace.size()},
          {"result", to_json(r.result)},
          {"trace", trace}};
}

inline json to_json(const ExtremalReport& r) {
  auto optional = [](const std::optional<double>& v) -> json {
    return v ? json(round12(*v)) : json(nullptr);
  };
  return {{"k", r.k},
          {"alpha", r.alpha},
          {"class_size", r.class_size},
          {"max_rho", round12(r.max_rho)},
          {"argmax_canonical", r.argmax_canonical.hex()},
          {"is_unique", r.is_unique},
          {"runner_up_rho", optional(r.runner_up_rho)},
          {"margin", optional(r.margin)},
          {"expected_rho", round12(r.expected_rho)}};
}

}  // namespace biblock
