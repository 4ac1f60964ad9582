#pragma once

// Closed tours over a terminal set, measured on shortest-path distances.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wayfinder/dijkstra.hpp"
#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"

namespace wayfinder {

struct MetricClosure {
  std::vector<NodeId> terminals;  // sorted, unique
  std::map<std::pair<NodeId, NodeId>, double> dist;
  std::map<std::pair<NodeId, NodeId>, Path> witness;

  double distance(const NodeId& a, const NodeId& b) const {
    if (a == b) return 0.0;
    auto it = dist.find({a, b});
    if (it == dist.end())
      throw Error(ErrorCode::DisconnectedTerminals, "no path from '" + a + "' to '" + b + "'");
    return it->second;
  }

  Path leg(const NodeId& a, const NodeId& b) const {
    if (a == b) return make_path(a, {});
    auto it = witness.find({a, b});
    if (it == witness.end())
      throw Error(ErrorCode::DisconnectedTerminals, "no path from '" + a + "' to '" + b + "'");
    return it->second;
  }
};

struct Tour {
  std::vector<NodeId> stops;  // starts and ends at home
  std::vector<Path> legs;
  double total_cost = 0.0;

  /// The tour expanded into the node sequence actually walked in the graph.
  std::vector<NodeId> walk() const {
    std::vector<NodeId> out;
    if (!stops.empty()) out.push_back(stops.front());
    for (const auto& leg : legs)
      for (const auto& e : leg.edges) out.push_back(e.to);
    return out;
  }
};

inline constexpr std::size_t kMaxExactTerminals = 12;

/// Pairwise shortest distances and witness paths, one Dijkstra run per terminal.
inline MetricClosure metric_closure(const Graph& g, std::span<const NodeId> terminals) {
  MetricClosure mc;
  for (const auto& t : terminals) {
    g.index_of(t);
    mc.terminals.push_back(t);
  }
  std::sort(mc.terminals.begin(), mc.terminals.end());
  mc.terminals.erase(std::unique(mc.terminals.begin(), mc.terminals.end()), mc.terminals.end());

  for (const auto& a : mc.terminals) {
    auto run = run_dijkstra(g, a);
    for (const auto& b : mc.terminals) {
      if (a == b) continue;
      if (!run.tree.dist.contains(b))
        throw Error(ErrorCode::DisconnectedTerminals, "no path from '" + a + "' to '" + b + "'");
      mc.dist.emplace(std::pair{a, b}, run.tree.dist.at(b));
      mc.witness.emplace(std::pair{a, b}, extract_path(g, run.tree, b));
    }
  }
  return mc;
}

namespace detail {

inline Tour assemble_tour(const MetricClosure& mc, const NodeId& home,
                          const std::vector<NodeId>& interior) {
  Tour t;
  t.stops.push_back(home);
  t.stops.insert(t.stops.end(), interior.begin(), interior.end());
  t.stops.push_back(home);
  if (t.stops.size() == 2) return t;  // home only: nothing to travel
  for (std::size_t i = 1; i < t.stops.size(); ++i) {
    t.legs.push_back(mc.leg(t.stops[i - 1], t.stops[i]));
    t.total_cost += t.legs.back().total_cost;
  }
  return t;
}

inline std::vector<NodeId> interior_of(const MetricClosure& mc, const NodeId& home) {
  if (!std::binary_search(mc.terminals.begin(), mc.terminals.end(), home))
    throw Error(ErrorCode::UnknownNode, "home '" + home + "' is not one of the terminals");
  std::vector<NodeId> rest;
  for (const auto& t : mc.terminals)
    if (t != home) rest.push_back(t);
  return rest;
}

}  // namespace detail

/// Exhaustive search over interior orderings. The first minimum in
/// lexicographic permutation order wins.
inline Tour solve_tsp_exact(const MetricClosure& mc, const NodeId& home) {
  if (mc.terminals.size() > kMaxExactTerminals)
    throw Error(ErrorCode::TooManyTerminals,
                "exact tours are limited to " + std::to_string(kMaxExactTerminals) + " terminals");
  auto order = detail::interior_of(mc, home);

  std::vector<NodeId> best = order;
  double best_cost = 0.0;
  bool have_best = false;
  do {
    double cost = 0.0;
    const NodeId* at = &home;
    for (const auto& next : order) {
      cost += mc.distance(*at, next);
      at = &next;
    }
    cost += mc.distance(*at, home);
    if (!have_best || cost < best_cost) {
      best = order;
      best_cost = cost;
      have_best = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  return detail::assemble_tour(mc, home, best);
}

/// Nearest-neighbor construction from home; ties go to the smallest id.
inline Tour solve_tsp_greedy(const MetricClosure& mc, const NodeId& home) {
  auto remaining = detail::interior_of(mc, home);
  std::vector<NodeId> order;
  NodeId at = home;
  while (!remaining.empty()) {
    auto pick = remaining.begin();
    double pick_cost = mc.distance(at, *pick);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      double c = mc.distance(at, *it);
      if (c < pick_cost) {
        pick = it;
        pick_cost = c;
      }
    }
    at = *pick;
    order.push_back(at);
    remaining.erase(pick);
  }
  mc.distance(at, home);
  return detail::assemble_tour(mc, home, order);
}

}  // namespace wayfinder
