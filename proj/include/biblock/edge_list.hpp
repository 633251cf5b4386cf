#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "biblock/graph.hpp"

namespace biblock {

// Edge-list text format:
//
//   k          <- vertex count, starts a new graph
//   u v        <- one edge per line, 0-based labels
//
// Anything after '#' is a comment and blank lines are ignored, so several
// graphs may be concatenated in one stream.

namespace detail {

inline long parse_label(const std::string& token, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ": '" + token + "' is not an integer");
  }
  return value;
}

}  // namespace detail

inline std::vector<Graph> parse_edge_lists(std::string_view text) {
  std::vector<Graph> graphs;
  long order = -1;
  std::vector<Edge> edges;
  auto flush = [&] {
    if (order < 0) return;
    if (order < 1 || order > kMaxOrder) {
      throw Error(Errc::InvalidSize, "vertex count " + std::to_string(order) + " out of range");
    }
    graphs.emplace_back(static_cast<int>(order), edges);
    edges.clear();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      flush();
      order = detail::parse_label(tokens[0], line_no);
    } else if (tokens.size() == 2) {
      if (order < 0) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": edge before vertex count");
      }
      long u = detail::parse_label(tokens[0], line_no);
      long v = detail::parse_label(tokens[1], line_no);
      if (u < 0 || v < 0 || u >= order || v >= order) {
        throw Error(Errc::OutOfRange, "line " + std::to_string(line_no) + ": edge (" +
                                          tokens[0] + "," + tokens[1] + ") outside 0.." +
                                          std::to_string(order - 1));
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 1 or 2 fields");
    }
  }
  flush();
  return graphs;
}

/// Exactly one graph from `text`.
inline Graph parse_edge_list(std::string_view text) {
  auto graphs = parse_edge_lists(text);
  if (graphs.size() != 1) {
    throw Error(Errc::ParseError,
                "expected one graph, found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

inline std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Reads a whole file, or standard input when `path` is "-".
inline std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace biblock
