#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wayfinder/error.hpp"

namespace wayfinder {

using NodeId = std::string;

enum class Directedness { undirected, directed };

/// A street or link between two nodes. In an undirected graph the edge is
/// stored once, in the orientation it was declared.
struct Edge {
  NodeId from;
  NodeId to;
  double cost = 0.0;
  std::optional<std::string> name;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  double cost = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Index-level adjacency entry; `edge` points into Graph::edges().
struct Arc {
  std::size_t to = 0;
  double cost = 0.0;
  std::size_t edge = 0;
};

inline bool is_valid_node_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' || c == '#')
      return false;
  }
  return true;
}

inline bool is_valid_cost(double cost) { return std::isfinite(cost) && cost >= 0.0; }

/// Immutable weighted network. Nodes are kept in lexicographic order and
/// every adjacency list is sorted by neighbor id, so nothing observable
/// depends on the order the input was supplied in.
class Graph {
public:
  Graph() = default;

  static Graph build(std::vector<NodeId> nodes, std::vector<Edge> edges,
                     Directedness directedness = Directedness::undirected) {
    Graph g;
    g.directedness_ = directedness;

    for (const auto& n : nodes) {
      if (!is_valid_node_id(n)) throw Error(ErrorCode::InvalidNodeId, "invalid node id '" + n + "'");
    }
    std::sort(nodes.begin(), nodes.end());
    if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end())
      throw Error(ErrorCode::DuplicateNode, "duplicate node '" + *dup + "'");
    g.nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < g.nodes_.size(); ++i) g.index_.emplace(g.nodes_[i], i);

    for (auto& e : edges) {
      if (!g.index_.contains(e.from) || !g.index_.contains(e.to))
        throw Error(ErrorCode::DanglingEndpoint,
                    "edge " + e.from + "-" + e.to + " references an undeclared node");
      if (e.from == e.to) throw Error(ErrorCode::SelfLoop, "self-loop at '" + e.from + "'");
      if (!is_valid_cost(e.cost))
        throw Error(ErrorCode::NegativeCost,
                    "edge " + e.from + "-" + e.to + " must have a finite nonnegative cost");
      if (e.cost == 0.0) e.cost = 0.0;  // drop a negative zero
      if (e.name && !is_valid_node_id(*e.name))
        throw Error(ErrorCode::ValidationError, "edge name '" + *e.name + "' must be a single token");
    }

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto u = g.index_.at(edges[i].from);
      auto v = g.index_.at(edges[i].to);
      auto key = g.directed() ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
      if (!seen.emplace(key, i).second)
        throw Error(ErrorCode::DuplicateEdge,
                    "duplicate edge " + edges[i].from + "-" + edges[i].to);
    }
    g.edges_ = std::move(edges);
    g.pair_index_ = std::move(seen);

    g.adjacency_.assign(g.nodes_.size(), {});
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
      auto u = g.index_.at(g.edges_[i].from);
      auto v = g.index_.at(g.edges_[i].to);
      g.adjacency_[u].push_back({v, g.edges_[i].cost, i});
      if (!g.directed()) g.adjacency_[v].push_back({u, g.edges_[i].cost, i});
    }
    for (auto& arcs : g.adjacency_)
      std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });

    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
      if (g.edges_[i].name) g.by_name_.emplace(*g.edges_[i].name, i);
    }
    return g;
  }

  bool directed() const noexcept { return directedness_ == Directedness::directed; }
  Directedness directedness() const noexcept { return directedness_; }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains(std::string_view id) const { return index_.find(id) != index_.end(); }

  std::optional<std::size_t> find_index(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view id) const {
    if (auto i = find_index(id)) return *i;
    throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(id) + "'");
  }

  const NodeId& id(std::size_t index) const { return nodes_.at(index); }

  std::span<const Arc> arcs(std::size_t index) const { return adjacency_.at(index); }

  std::vector<Neighbor> neighbors(std::string_view id) const {
    std::vector<Neighbor> out;
    for (const auto& arc : arcs(index_of(id))) out.push_back({nodes_[arc.to], arc.cost});
    return out;
  }

  /// The edge joining `from` to `to`, oriented as the traversal (from -> to).
  /// Undirected edges match in either direction.
  std::optional<Edge> find_edge(std::string_view from, std::string_view to) const {
    auto u = find_index(from);
    auto v = find_index(to);
    if (!u || !v) return std::nullopt;
    auto key = directed() ? std::pair{*u, *v} : std::pair{std::min(*u, *v), std::max(*u, *v)};
    auto it = pair_index_.find(key);
    if (it == pair_index_.end()) return std::nullopt;
    Edge e = edges_[it->second];
    if (e.from != from) std::swap(e.from, e.to);
    return e;
  }

  /// First edge (in canonical order) carrying `name`.
  const Edge* find_edge_by_name(std::string_view name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &edges_[it->second];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directedness_ == b.directedness_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

private:
  Directedness directedness_ = Directedness::undirected;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::vector<std::vector<Arc>> adjacency_;
};

inline Graph build_graph(std::vector<NodeId> nodes, std::vector<Edge> edges,
                         Directedness directedness = Directedness::undirected) {
  return Graph::build(std::move(nodes), std::move(edges), directedness);
}

/// Convenience for tests and generators: node set is the union of endpoints
/// plus any extra ids.
inline Graph graph_from_edges(std::vector<Edge> edges,
                              Directedness directedness = Directedness::undirected,
                              std::vector<NodeId> extra_nodes = {}) {
  std::vector<NodeId> nodes = std::move(extra_nodes);
  for (const auto& e : edges) {
    nodes.push_back(e.from);
    nodes.push_back(e.to);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return Graph::build(std::move(nodes), std::move(edges), directedness);
}

/// Ordered edge sequence from origin to destination. Each edge is stored in
/// traversal orientation.
struct Path {
  NodeId origin;
  NodeId destination;
  std::vector<Edge> edges;
  double total_cost = 0.0;

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out{origin};
    for (const auto& e : edges) out.push_back(e.to);
    return out;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Sums costs front to back, the order every validator uses.
inline double sum_costs(std::span<const Edge> edges) {
  double total = 0.0;
  for (const auto& e : edges) total += e.cost;
  return total;
}

inline Path make_path(NodeId origin, std::vector<Edge> edges) {
  Path p;
  p.destination = edges.empty() ? origin : edges.back().to;
  p.origin = std::move(origin);
  p.total_cost = sum_costs(edges);
  p.edges = std::move(edges);
  return p;
}

/// Builds the path visiting `nodes` in order; nullopt if any hop is missing.
inline std::optional<Path> path_through(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.empty() || !g.contains(nodes.front())) return std::nullopt;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    auto e = g.find_edge(nodes[i - 1], nodes[i]);
    if (!e) return std::nullopt;
    edges.push_back(std::move(*e));
  }
  return make_path(nodes.front(), std::move(edges));
}

/// Follows named streets from `origin`; nullopt if a name is unknown or the
/// street does not touch the walker's current node.
inline std::optional<Path> path_from_street_names(const Graph& g, std::string_view origin,
                                                  std::span<const std::string> names) {
  if (!g.contains(origin)) return std::nullopt;
  NodeId at{origin};
  std::vector<Edge> edges;
  for (const auto& name : names) {
    const Edge* e = g.find_edge_by_name(name);
    if (!e) return std::nullopt;
    Edge step = *e;
    if (step.from != at) {
      if (g.directed() || step.to != at) return std::nullopt;
      std::swap(step.from, step.to);
    }
    at = step.to;
    edges.push_back(std::move(step));
  }
  return make_path(NodeId{origin}, std::move(edges));
}

/// True iff every edge exists in `g` with the stated cost (and name, when
/// given), the edges chain origin -> destination, and total_cost is their
/// exact front-to-back sum.
inline bool validate_path(const Graph& g, const Path& p) {
  if (!g.contains(p.origin) || !g.contains(p.destination)) return false;
  NodeId at = p.origin;
  for (const auto& e : p.edges) {
    if (e.from != at) return false;
    auto real = g.find_edge(e.from, e.to);
    if (!real || real->cost != e.cost) return false;
    if (e.name && real->name != e.name) return false;
    at = e.to;
  }
  return at == p.destination && sum_costs(p.edges) == p.total_cost;
}

}  // namespace wayfinder
