#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biblock/biblock.hpp"
#include "biblock/report.hpp"

namespace biblock::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

struct Common {
  std::string input;
  std::string format = "text";
  double tol = kDefaultTolerance;
  int jobs = 0;
};

namespace detail {

inline void add_common(CLI::App* cmd, Common& c, bool needs_input) {
  auto* in = cmd->add_option("--input", c.input, "edge-list file, '-' for standard input");
  if (needs_input) in->required();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--tol", c.tol, "eigensolver tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "worker threads (0 = available parallelism)")
      ->check(CLI::NonNegativeNumber);
}

inline Graph load(const Common& c) { return parse_edge_list(read_text(c.input)); }

inline std::string join(const std::vector<int>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

inline std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

inline void require_connected_bi_block(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "input graph is disconnected");
  if (!is_bi_block(g)) throw Error(Errc::InvalidArgument, "input graph is not bi-block");
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-block graphs: independence number, spectral radius, rewrites, enumeration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "biblock 1.0.0");

  Common validate_opts, decompose_opts, alpha_opts, rho_opts, ident_opts, rewrite_opts,
      normalize_opts, enum_opts, verify_opts;

  auto* validate = app.add_subcommand("validate", "check that the input is a bi-block graph");
  detail::add_common(validate, validate_opts, true);

  auto* decompose_cmd = app.add_subcommand("decompose", "blocks, cut vertices and block indices");
  detail::add_common(decompose_cmd, decompose_opts, true);

  auto* alpha = app.add_subcommand("alpha", "independence number");
  detail::add_common(alpha, alpha_opts, true);
  bool witness = false;
  std::string method = "matching";
  alpha->add_flag("--witness", witness, "also print a maximum independent set");
  alpha->add_option("--method", method, "matching or bruteforce")
      ->check(CLI::IsMember({"matching", "bruteforce"}));

  auto* rho = app.add_subcommand("rho", "spectral radius by shifted power iteration");
  detail::add_common(rho, rho_opts, true);

  auto* identities = app.add_subcommand("identities", "eigenvector identity residuals (JSON)");
  detail::add_common(identities, ident_opts, false);
  std::vector<int> ident_sizes;
  double threshold = kIdentityTolerance;
  auto* sizes_opt = identities->add_option("--sizes", ident_sizes, "two-block sizes p,q,m,n")
                        ->delimiter(',')
                        ->expected(4);
  identities->add_option("--threshold", threshold, "residual tolerance before scaling by rho")
      ->check(CLI::PositiveNumber);
  sizes_opt->excludes(identities->get_option("--input"));

  auto* rewrite = app.add_subcommand("rewrite", "apply one rewrite step (JSON)");
  detail::add_common(rewrite, rewrite_opts, false);
  std::string kind;
  std::vector<int> blocks, n1, rewrite_sizes;
  std::optional<int> vertex;
  std::string orientation;
  rewrite->add_option("--kind", kind, "merge, reattach, split or reduce")
      ->required()
      ->check(CLI::IsMember({"merge", "reattach", "split", "reduce"}));
  rewrite->add_option("--blocks", blocks, "piece ids i,j")->delimiter(',')->expected(2);
  rewrite->add_option("--vertex", vertex, "shared vertex for reduce");
  rewrite->add_option("--n1", n1, "split part N1 as a comma list")->delimiter(',');
  rewrite->add_option("--orientation", orientation, "aligned or crossed (merge)")
      ->check(CLI::IsMember({"aligned", "crossed"}));
  auto* rw_sizes = rewrite->add_option("--sizes", rewrite_sizes, "use the two-piece graph p,q,m,n")
                       ->delimiter(',')
                       ->expected(4);
  rw_sizes->excludes(rewrite->get_option("--input"));

  auto* normalize_cmd = app.add_subcommand("normalize", "rewrite down to K_{alpha,k-alpha} (JSON)");
  detail::add_common(normalize_cmd, normalize_opts, true);

  auto* enumerate = app.add_subcommand("enumerate", "connected bi-block graphs on k vertices");
  detail::add_common(enumerate, enum_opts, false);
  int enum_k = 0;
  std::optional<int> enum_alpha;
  std::string out_path;
  enumerate->add_option("--k", enum_k, "vertex count")->required();
  enumerate->add_option("--alpha", enum_alpha, "keep only this independence number");
  enumerate->add_option("--out", out_path, "output file (default standard output)");

  auto* verify = app.add_subcommand("verify-theorem", "extremal check over B(k, alpha) (JSON)");
  detail::add_common(verify, verify_opts, false);
  int verify_k = 0;
  std::optional<int> verify_alpha;
  verify->add_option("--k", verify_k, "vertex count")->required();
  verify->add_option("--alpha", verify_alpha, "single independence number");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*validate) {
      Graph g = detail::load(validate_opts);
      bool connected = is_connected(g);
      bool bipartite = is_bipartite(g);
      bool biblock = is_bi_block(g);
      std::optional<int> block_total;
      if (connected) block_total = static_cast<int>(decompose(g).blocks.size());
      if (validate_opts.format == "json") {
        json j{{"k", g.order()},
               {"edges", g.size()},
               {"connected", connected},
               {"bipartite", bipartite},
               {"bi_block", biblock},
               {"blocks", block_total ? json(*block_total) : json(nullptr)},
               {"canonical", canonical_form(g).hex()}};
        out << j.dump(2) << "\n";
      } else {
        out << "k=" << g.order() << "\nedges=" << g.size() << "\nconnected=" << std::boolalpha
            << connected << "\nbipartite=" << bipartite << "\nbi_block=" << biblock << "\n";
        if (block_total) out << "blocks=" << *block_total << "\n";
        out << "canonical=" << canonical_form(g).hex() << "\n";
      }
      return biblock ? kOk : kVerificationFailed;
    }

    if (*decompose_cmd) {
      Graph g = detail::load(decompose_opts);
      auto t = decompose(g);
      if (decompose_opts.format == "json") {
        json j = to_json(t);
        j["k"] = g.order();
        j["is_bi_block"] = is_bi_block(g);
        out << j.dump(2) << "\n";
      } else {
        out << "blocks=" << t.blocks.size() << "\n";
        for (std::size_t i = 0; i < t.blocks.size(); ++i) {
          const auto& b = t.blocks[i];
          out << "block " << i << " vertices=" << detail::join(b.vertices, ",");
          if (b.parts) out << " parts=" << b.parts->m.size() << "x" << b.parts->n.size();
          else out << " parts=none";
          out << "\n";
        }
        std::vector<int> index;
        for (const auto& ids : t.incidence) index.push_back(static_cast<int>(ids.size()));
        out << "cut_vertices=" << detail::join(t.cut_vertices) << "\n";
        out << "block_index=" << detail::join(index) << "\n";
        out << "leaf_blocks=" << detail::join(leaf_blocks(t)) << "\n";
      }
      return kOk;
    }

    if (*alpha) {
      Graph g = detail::load(alpha_opts);
      auto r = method == "matching" ? alpha_matching(g) : alpha_bruteforce(g);
      if (alpha_opts.format == "json") {
        json j{{"alpha", r.alpha}, {"method", method}};
        if (witness) j["witness"] = r.witness;
        out << j.dump(2) << "\n";
      } else {
        out << "alpha=" << r.alpha << "\n";
        if (witness) out << "witness=" << detail::join(r.witness) << "\n";
      }
      return kOk;
    }

    if (*rho) {
      Graph g = detail::load(rho_opts);
      auto pair = perron(g, rho_opts.tol);
      if (rho_opts.format == "json") {
        json j{{"rho", round12(pair.rho)},
               {"iterations", pair.iterations},
               {"residual", round12(pair.residual)}};
        out << j.dump(2) << "\n";
      } else {
        out << "rho=" << detail::fixed12(pair.rho) << "\n";
      }
      return kOk;
    }

    if (*identities) {
      json j;
      bool ok = true;
      if (!ident_sizes.empty()) {
        auto layout = two_block_layout(ident_sizes[0], ident_sizes[1], ident_sizes[2],
                                       ident_sizes[3]);
        auto pair = perron(build_two_block(layout), ident_opts.tol);
        auto report = check_two_block_identities(extract_two_block_data(layout, pair), threshold);
        ok = report.ok();
        j = {{"mode", "two_block"},
             {"sizes",
              {{"p", layout.p}, {"q", layout.q}, {"m", layout.m}, {"n", layout.n}}},
             {"rho", round12(pair.rho)},
             {"closed_form_rho", round12(two_block_rho(layout.p, layout.q, layout.m, layout.n))}};
        j.update(to_json(report));
      } else if (!ident_opts.input.empty()) {
        Graph g = detail::load(ident_opts);
        detail::require_connected_bi_block(g);
        auto configs = leaf_configurations(BlockStructure::standard(g));
        if (configs.empty()) {
          throw Error(Errc::NoSuchConfiguration,
                      "no leaf block whose neighbor has a non-cut vertex on the cut vertex's side");
        }
        auto pair = perron(g, ident_opts.tol);
        json list = json::array();
        for (const auto& cfg : configs) {
          auto report = check_leaf_identities(extract_leaf_data(cfg, pair), threshold);
          ok = ok && report.ok();
          json entry{{"leaf", cfg.leaf},
                     {"neighbor", cfg.neighbor},
                     {"cut", cfg.cut},
                     {"c", cfg.c},
                     {"m", cfg.M.size()},
                     {"n", cfg.N.size()}};
          entry.update(to_json(report));
          list.push_back(std::move(entry));
        }
        j = {{"mode", "leaf"}, {"rho", round12(pair.rho)}, {"ok", ok}, {"configurations", list}};
      } else {
        throw Error(Errc::InvalidArgument, "identities needs --sizes or --input");
      }
      out << j.dump(2) << "\n";
      return ok ? kOk : kVerificationFailed;
    }

    if (*rewrite) {
      Graph g;
      std::optional<BlockStructure> s;
      if (!rewrite_sizes.empty()) {
        auto layout = two_block_layout(rewrite_sizes[0], rewrite_sizes[1], rewrite_sizes[2],
                                       rewrite_sizes[3]);
        g = build_two_block(layout);
        s = two_block_structure(layout);
      } else if (!rewrite_opts.input.empty()) {
        g = detail::load(rewrite_opts);
        detail::require_connected_bi_block(g);
        s = BlockStructure::standard(g);
      } else {
        throw Error(Errc::InvalidArgument, "rewrite needs --sizes or --input");
      }
      auto need_blocks = [&] {
        if (blocks.size() != 2) throw Error(Errc::InvalidArgument, "--blocks i,j is required");
      };
      std::optional<RewriteOutcome> outcome;
      if (kind == "merge") {
        need_blocks();
        Orientation o = orientation.empty() ? orientation_for(*s, blocks[0], blocks[1])
                        : orientation == "aligned" ? Orientation::Aligned
                                                   : Orientation::Crossed;
        outcome = merge_blocks(g, *s, blocks[0], blocks[1], o);
      } else if (kind == "reattach") {
        need_blocks();
        outcome = reattach_cut_vertex(g, *s, blocks[0], blocks[1]);
      } else if (kind == "split") {
        need_blocks();
        VertexSet part = n1.empty() ? default_n1(*s, blocks[0], blocks[1]) : VertexSet(n1);
        outcome = split_leaf_partition(g, *s, blocks[0], blocks[1], part);
      } else {
        if (!vertex) throw Error(Errc::InvalidArgument, "reduce needs --vertex");
        auto pair = blocks.size() == 2
                        ? std::pair<int, int>{blocks[0], blocks[1]}
                        : select_reduction_pair(*s, *vertex, alpha_matching(g).witness);
        outcome = reduce_block_index(g, *s, *vertex, pair.first, pair.second);
      }
      out << to_json(*outcome).dump(2) << "\n";
      return kOk;
    }

    if (*normalize_cmd) {
      Graph g = detail::load(normalize_opts);
      detail::require_connected_bi_block(g);
      out << to_json(normalize(g)).dump(2) << "\n";
      return kOk;
    }

    if (*enumerate) {
      auto graphs = enumerate_class({enum_k, enum_alpha}, enum_opts.jobs);
      std::ostringstream text;
      if (enum_opts.format == "json") {
        json list = json::array();
        for (const auto& g : graphs) list.push_back(to_json(g));
        text << list.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < graphs.size(); ++i)
          text << (i ? "\n" : "") << format_edge_list(graphs[i]);
      }
      if (out_path.empty()) {
        out << text.str();
      } else {
        std::ofstream file(out_path);
        if (!file) throw Error(Errc::InvalidArgument, "cannot write '" + out_path + "'");
        file << text.str();
      }
      return kOk;
    }

    if (*verify) {
      json j;
      if (verify_alpha) {
        j = to_json(extremal_verify({verify_k, verify_alpha}, verify_opts.jobs, verify_opts.tol));
      } else {
        j = json::array();
        for (const auto& r : extremal_verify_all(verify_k, verify_opts.jobs, verify_opts.tol))
          j.push_back(to_json(r));
      }
      out << j.dump(2) << "\n";
      return kOk;
    }
  } catch (const TheoremViolation& e) {
    err << "error: " << e.what() << "\ncounterexample:\n" << format_edge_list(e.counterexample());
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::PostconditionFailed ? kVerificationFailed : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace biblock::cli
