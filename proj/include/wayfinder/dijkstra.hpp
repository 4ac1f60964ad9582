#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"

namespace wayfinder {

/// One row of the worksheet. A blank dist means "not written down yet".
struct NodeLabel {
  std::optional<double> dist;
  std::optional<NodeId> last;
  bool shaded = false;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

struct LabelTable {
  NodeId origin;
  std::map<NodeId, NodeLabel> labels;

  friend bool operator==(const LabelTable&, const LabelTable&) = default;
};

/// Origin-rooted predecessor map. `dist` covers every reachable node
/// including the origin; `parent` covers reachable nodes other than the origin.
struct SpanningTree {
  NodeId origin;
  std::map<NodeId, NodeId> parent;
  std::map<NodeId, double> dist;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

struct DijkstraResult {
  LabelTable table;
  SpanningTree tree;
  /// Nodes in the order they were chosen as Current. The origin is shaded
  /// up front and is not a selection.
  std::vector<NodeId> selections;
};

/// Worksheet Dijkstra. Among tied unshaded candidates the lexicographically
/// smallest id is taken; a neighbor's label is replaced only on a strictly
/// smaller dist, so the first predecessor found is kept on ties. Stops once
/// no unshaded node has a dist, which leaves unreachable nodes blank.
inline DijkstraResult run_dijkstra(const Graph& g, std::string_view origin) {
  const std::size_t src = g.index_of(origin);
  const std::size_t n = g.node_count();
  std::vector<std::optional<double>> dist(n);
  std::vector<std::optional<std::size_t>> last(n);
  std::vector<bool> shaded(n, false);

  // (dist, index) ordering reproduces a full scan that breaks ties on the
  // smallest id; stale entries are skipped on pop.
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  auto relax_from = [&](std::size_t u) {
    for (const auto& arc : g.arcs(u)) {
      if (shaded[arc.to]) continue;
      double candidate = *dist[u] + arc.cost;
      if (!dist[arc.to] || candidate < *dist[arc.to]) {
        dist[arc.to] = candidate;
        last[arc.to] = u;
        frontier.emplace(candidate, arc.to);
      }
    }
  };

  dist[src] = 0.0;
  shaded[src] = true;
  relax_from(src);

  DijkstraResult result;
  while (!frontier.empty()) {
    auto [d, u] = frontier.top();
    frontier.pop();
    if (shaded[u] || d != *dist[u]) continue;
    result.selections.push_back(g.id(u));
    relax_from(u);
    shaded[u] = true;
  }

  result.table.origin = g.id(src);
  result.tree.origin = g.id(src);
  for (std::size_t i = 0; i < n; ++i) {
    NodeLabel label;
    label.dist = dist[i];
    label.shaded = shaded[i];
    if (last[i]) label.last = g.id(*last[i]);
    result.table.labels.emplace(g.id(i), label);
    if (dist[i]) {
      result.tree.dist.emplace(g.id(i), *dist[i]);
      if (last[i]) result.tree.parent.emplace(g.id(i), g.id(*last[i]));
    }
  }
  return result;
}

/// Walks parents back from `destination` and returns the forward path.
inline Path extract_path(const Graph& g, const SpanningTree& tree, std::string_view destination) {
  g.index_of(destination);
  if (!tree.dist.contains(std::string(destination)))
    throw Error(ErrorCode::Unreachable,
                "'" + std::string(destination) + "' is unreachable from '" + tree.origin + "'");
  std::vector<NodeId> chain{NodeId(destination)};
  while (chain.back() != tree.origin) {
    auto it = tree.parent.find(chain.back());
    if (it == tree.parent.end() || chain.size() > tree.dist.size())
      throw Error(ErrorCode::ValidationError, "spanning tree does not chain back to the origin");
    chain.push_back(it->second);
  }
  std::reverse(chain.begin(), chain.end());
  auto path = path_through(g, chain);
  if (!path) throw Error(ErrorCode::ValidationError, "spanning tree uses an edge missing from the graph");
  return *path;
}

inline constexpr std::size_t kDefaultPathCap = 1000;

/// Every minimum-cost simple path origin -> destination, in lexicographic
/// order of node sequence, stopping after `cap` paths.
inline std::vector<Path> all_shortest_paths(const Graph& g, std::string_view origin,
                                            std::string_view destination,
                                            std::size_t cap = kDefaultPathCap) {
  if (cap == 0) throw Error(ErrorCode::InvalidParams, "cap must be positive");
  const std::size_t src = g.index_of(origin);
  const std::size_t dst = g.index_of(destination);
  const auto run = run_dijkstra(g, origin);

  const std::size_t n = g.node_count();
  std::vector<std::optional<double>> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = run.table.labels.at(g.id(i)).dist;
  if (!dist[dst]) return {};

  // Arc u->v is tight when it lies on some shortest path from the origin.
  auto tight = [&](std::size_t u, const Arc& arc) {
    return dist[u] && dist[arc.to] && *dist[u] + arc.cost == *dist[arc.to];
  };

  std::vector<std::vector<std::size_t>> tight_in(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& arc : g.arcs(u))
      if (tight(u, arc)) tight_in[arc.to].push_back(u);

  std::vector<bool> leads_to_dst(n, false);
  std::vector<std::size_t> stack{dst};
  leads_to_dst[dst] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : tight_in[v]) {
      if (!leads_to_dst[u]) {
        leads_to_dst[u] = true;
        stack.push_back(u);
      }
    }
  }

  std::vector<Path> out;
  std::vector<std::size_t> walk{src};
  std::vector<bool> on_walk(n, false);
  on_walk[src] = true;

  std::function<void(std::size_t)> extend = [&](std::size_t u) {
    if (out.size() >= cap) return;
    if (u == dst) {
      std::vector<NodeId> ids;
      for (auto i : walk) ids.push_back(g.id(i));
      out.push_back(*path_through(g, ids));
      return;
    }
    for (const auto& arc : g.arcs(u)) {
      if (on_walk[arc.to] || !leads_to_dst[arc.to] || !tight(u, arc)) continue;
      on_walk[arc.to] = true;
      walk.push_back(arc.to);
      extend(arc.to);
      walk.pop_back();
      on_walk[arc.to] = false;
      if (out.size() >= cap) return;
    }
  };
  extend(src);
  return out;
}

}  // namespace wayfinder
