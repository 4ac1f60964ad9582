#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain failure
// (unreachable destination, disconnected or too many terminals), 2 usage or
// input errors.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "wayfinder/api.hpp"
#include "wayfinder/server.hpp"
#include "wayfinder/wayfinder.hpp"

#ifndef WAYFINDER_FIXTURES_DIR
#define WAYFINDER_FIXTURES_DIR ""
#endif

namespace wayfinder {

namespace detail {

inline Graph load_graph_file(const std::string& path) {
  auto text = read_text_file(path);
  if (std::filesystem::path(path).extension() == ".json") return to_graph(parse_city_map(text));
  return parse_edge_list(text);
}

inline std::vector<NodeId> split_list(const std::string& text) {
  std::vector<NodeId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Unreachable:
    case ErrorCode::DisconnectedTerminals:
    case ErrorCode::TooManyTerminals: return 1;
    default: return 2;
  }
}

inline std::atomic<bool>& stop_requested() {
  static std::atomic<bool> flag{false};
  return flag;
}

inline int run_server(const std::string& host, int port, const std::string& fixtures,
                      const std::string& ui_dir, const std::string& snapshot, std::ostream& out) {
  Api api(fixtures);
  if (!snapshot.empty() && std::filesystem::exists(snapshot))
    api.store().restore(json::parse(read_text_file(snapshot)));

  httplib::Server server;
  attach_api(server, api, ui_dir);

  stop_requested() = false;
  std::signal(SIGINT, [](int) { stop_requested() = true; });
  std::signal(SIGTERM, [](int) { stop_requested() = true; });
  std::thread watcher([&server] {
    while (!stop_requested()) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
  });

  out << "listening on " << host << ":" << port << "\n" << std::flush;
  bool ok = server.listen(host, port);
  stop_requested() = true;
  watcher.join();

  if (!snapshot.empty()) {
    std::ofstream file(snapshot);
    file << api.store().snapshot().dump(2) << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest paths, spanning trees and tours on weighted networks", "wayfinder"};
  app.require_subcommand(1);

  std::string graph_file, origin, from, to, home, visit, map_file, format = "text";
  std::string host = "127.0.0.1", fixtures = WAYFINDER_FIXTURES_DIR, ui_dir, snapshot;
  std::size_t cap = kDefaultPathCap, n = 0, k = 0, shortcuts = 0;
  std::uint64_t seed = 0;
  bool all = false, exact = false, greedy = false;
  int port = 8080;
  if (const char* env = std::getenv("WAYFINDER_PORT")) port = std::atoi(env);

  auto* spt = app.add_subcommand("spt", "Label table and shortest-path spanning tree from an origin");
  spt->add_option("--graph", graph_file, "Edge-list or city-map file")->required();
  spt->add_option("--origin", origin, "Origin node")->required();
  std::string spt_format = "table";
  spt->add_option("--format", spt_format)->check(CLI::IsMember({"table", "dot", "json"}));

  auto* route = app.add_subcommand("route", "Shortest path between two nodes");
  route->add_option("--graph", graph_file)->required();
  route->add_option("--from", from)->required();
  route->add_option("--to", to)->required();
  route->add_flag("--all", all, "List every shortest path");
  route->add_option("--cap", cap, "Maximum number of paths with --all")->check(CLI::PositiveNumber);
  route->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tour = app.add_subcommand("tour", "Closed tour from home through a set of nodes");
  tour->add_option("--graph", graph_file)->required();
  tour->add_option("--home", home)->required();
  tour->add_option("--visit", visit, "Comma-separated nodes (default: every node)");
  auto* exact_flag = tour->add_flag("--exact", exact, "Exhaustive search (default)");
  tour->add_flag("--greedy", greedy, "Nearest-neighbor heuristic")->excludes(exact_flag);
  tour->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* grid = app.add_subcommand("grid", "Grid map commands");
  grid->require_subcommand(1);
  auto* grid_route = grid->add_subcommand("route", "Shortest route between two grid markers");
  grid_route->add_option("--map", map_file)->required();
  grid_route->add_option("--from", from)->required();
  grid_route->add_option("--to", to)->required();
  grid_route->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* stats = app.add_subcommand("stats", "Mean geodesic distance and diameter");
  stats->add_option("--graph", graph_file)->required();
  stats->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "Graph generators");
  gen->require_subcommand(1);
  auto* lattice = gen->add_subcommand("lattice", "Ring lattice plus seeded random shortcuts");
  lattice->add_option("--n", n)->required();
  lattice->add_option("--k", k)->required();
  lattice->add_option("--shortcuts", shortcuts)->default_val(0);
  lattice->add_option("--seed", seed)->default_val(0);

  auto* serve = app.add_subcommand("serve", "Run the workbench HTTP API");
  serve->add_option("--port", port, "Port (default $WAYFINDER_PORT or 8080)");
  serve->add_option("--host", host);
  serve->add_option("--fixtures", fixtures, "Directory of shipped fixtures");
  serve->add_option("--ui", ui_dir, "Static workbench assets, served under /ui");
  serve->add_option("--snapshot", snapshot, "Load sessions from / save them to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spt) {
      Graph g = detail::load_graph_file(graph_file);
      auto result = run_dijkstra(g, origin);
      if (spt_format == "dot") out << render_dot(g, result);
      else if (spt_format == "json") out << solution_to_json(result).dump(2) << "\n";
      else out << render_table(result.table);
    } else if (*route) {
      Graph g = detail::load_graph_file(graph_file);
      if (all) {
        auto paths = all_shortest_paths(g, from, to, cap);
        if (paths.empty()) throw Error(ErrorCode::Unreachable, "'" + to + "' is unreachable from '" + from + "'");
        if (format == "json") {
          json list = json::array();
          for (const auto& p : paths) list.push_back(path_to_json(p));
          out << json{{"paths", list}, {"complete", paths.size() < cap}}.dump(2) << "\n";
        } else {
          for (const auto& p : paths) out << render_path(p);
        }
      } else {
        auto result = run_dijkstra(g, from);
        auto path = extract_path(g, result.tree, to);
        out << (format == "json" ? path_to_json(path).dump(2) + "\n" : render_path(path));
      }
    } else if (*tour) {
      Graph g = detail::load_graph_file(graph_file);
      std::vector<NodeId> terminals{home};
      if (visit.empty()) terminals.assign(g.nodes().begin(), g.nodes().end());
      else for (auto& t : detail::split_list(visit)) terminals.push_back(t);
      auto mc = metric_closure(g, terminals);
      Tour t = greedy ? solve_tsp_greedy(mc, home) : solve_tsp_exact(mc, home);
      out << (format == "json" ? tour_to_json(t).dump(2) + "\n" : render_tour(t));
    } else if (*grid_route) {
      if (from.size() != 1 || to.size() != 1)
        throw Error(ErrorCode::InvalidParams, "grid markers are single characters");
      GridMap gm = parse_grid(read_text_file(map_file));
      GridGraph gg = grid_to_graph(gm);
      const auto& a = gg.node_for(from[0]);
      const auto& b = gg.node_for(to[0]);
      auto result = run_dijkstra(gg.graph, a);
      auto path = extract_path(gg.graph, result.tree, b);
      if (format == "json") {
        out << path_to_json(path).dump(2) << "\n";
      } else {
        std::string drawn = serialize_grid(gm);
        auto nodes = path.nodes();
        for (std::size_t r = 0; r < gm.height; ++r)
          for (std::size_t c = 0; c < gm.width; ++c) {
            char& ch = drawn[r * (gm.width + 1) + c];
            if (ch == '.' && std::find(nodes.begin(), nodes.end(), cell_node_id(r, c)) != nodes.end())
              ch = '*';
          }
        out << render_path(path) << drawn;
      }
    } else if (*stats) {
      auto s = path_stats(detail::load_graph_file(graph_file));
      out << (format == "json" ? stats_to_json(s).dump(2) + "\n" : render_stats(s));
    } else if (*lattice) {
      out << serialize_edge_list(ring_lattice_with_shortcuts(n, k, shortcuts, seed));
    } else if (*serve) {
      return detail::run_server(host, port, fixtures, ui_dir, snapshot, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  }
  return 0;
}

}  // namespace wayfinder
