#pragma once

// Whole-network path statistics and a ring-lattice-plus-shortcuts generator
// for small-world comparisons.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wayfinder/dijkstra.hpp"
#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"

namespace wayfinder {

struct PathStats {
  double mean_geodesic = 0.0;
  double diameter = 0.0;
  std::size_t reachable_pairs = 0;
  std::size_t unreachable_pairs = 0;

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

/// Statistics over ordered pairs (u, v), u != v. Unreachable pairs are
/// counted but left out of the mean and the diameter.
inline PathStats path_stats(const Graph& g) {
  PathStats s;
  double total = 0.0;
  for (const auto& origin : g.nodes()) {
    auto run = run_dijkstra(g, origin);
    for (const auto& [node, d] : run.tree.dist) {
      if (node == origin) continue;
      total += d;
      if (d > s.diameter) s.diameter = d;
      ++s.reachable_pairs;
    }
    s.unreachable_pairs += g.node_count() - run.tree.dist.size();
  }
  if (s.reachable_pairs > 0) s.mean_geodesic = total / static_cast<double>(s.reachable_pairs);
  return s;
}

/// Zero-padded so lexicographic id order matches numeric order.
inline NodeId lattice_node_id(std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  std::size_t width = std::to_string(n - 1).size();
  return std::string(width - digits.size(), '0') + digits;
}

/// Ring of `n` nodes, each joined to its k/2 nearest neighbors on either
/// side (unit cost), plus `shortcuts` extra unit edges.
///
/// Shortcuts are drawn with std::mt19937_64 seeded by `seed`: each attempt
/// takes u = rng() % n then v = rng() % n and keeps the pair if u != v and
/// the pair is not already joined. The engine and the reduction are both
/// fully specified, so the output is identical on every platform.
inline Graph ring_lattice_with_shortcuts(std::size_t n, std::size_t k, std::size_t shortcuts,
                                         std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidParams, "lattice needs n >= 3");
  if (k >= n) throw Error(ErrorCode::InvalidParams, "lattice needs k < n");
  if (k % 2 != 0) throw Error(ErrorCode::InvalidParams, "lattice needs an even k");

  std::set<std::pair<std::size_t, std::size_t>> joined;
  auto join = [&](std::size_t a, std::size_t b) {
    return joined.emplace(std::min(a, b), std::max(a, b)).second;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t step = 1; step <= k / 2; ++step) join(i, (i + step) % n);

  const std::size_t capacity = n * (n - 1) / 2;
  if (shortcuts > capacity - joined.size())
    throw Error(ErrorCode::InvalidParams, "not enough unjoined pairs for the requested shortcuts");

  std::mt19937_64 rng(seed);
  for (std::size_t added = 0; added < shortcuts;) {
    std::size_t u = static_cast<std::size_t>(rng() % n);
    std::size_t v = static_cast<std::size_t>(rng() % n);
    if (u != v && join(u, v)) ++added;
  }

  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(lattice_node_id(i, n));
  std::vector<Edge> edges;
  for (const auto& [a, b] : joined) edges.push_back({nodes[a], nodes[b], 1.0, std::nullopt});
  return Graph::build(std::move(nodes), std::move(edges));
}

}  // namespace wayfinder
