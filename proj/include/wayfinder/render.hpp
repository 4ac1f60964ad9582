#pragma once

// Plain-text and Graphviz renderings used by the CLI.

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wayfinder/analysis.hpp"
#include "wayfinder/dijkstra.hpp"
#include "wayfinder/edge_list.hpp"
#include "wayfinder/graph.hpp"
#include "wayfinder/planners.hpp"

namespace wayfinder {

/// Worksheet table with columns node, dist, last, shaded. Blank cells print
/// as "-".
inline std::string render_table(const LabelTable& table) {
  std::vector<std::array<std::string, 4>> rows{{"node", "dist", "last", "shaded"}};
  for (const auto& [node, label] : table.labels)
    rows.push_back({node, label.dist ? format_number(*label.dist) : "-", label.last.value_or("-"),
                    label.shaded ? "yes" : "no"});

  std::array<std::size_t, 4> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());

  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      out += r[c];
      if (c + 1 < 4) out += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Every graph edge appears once; spanning-tree edges carry class="tree"
/// and style=bold, oriented parent -> child.
inline std::string render_dot(const Graph& g, const DijkstraResult& result) {
  const bool directed = g.directed();
  const std::string arrow = directed ? " -> " : " -- ";
  std::set<std::pair<NodeId, NodeId>> tree_edges;
  for (const auto& [child, parent] : result.tree.parent) tree_edges.emplace(parent, child);

  std::string out = directed ? "digraph spt {\n" : "graph spt {\n";
  for (const auto& n : g.nodes()) {
    const auto& label = result.table.labels.at(n);
    std::string text = n + "\\ndist=" + (label.dist ? format_number(*label.dist) : "-");
    out += "  " + detail::dot_quote(n) + " [label=\"" + text + "\"";
    if (label.shaded) out += ", style=filled";
    if (n == result.table.origin) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const auto& e : g.edges()) {
    NodeId a = e.from, b = e.to;
    bool in_tree = tree_edges.contains({a, b});
    if (!in_tree && !directed && tree_edges.contains({b, a})) {
      std::swap(a, b);
      in_tree = true;
    }
    out += "  " + detail::dot_quote(a) + arrow + detail::dot_quote(b) + " [label=\"" +
           format_number(e.cost) + "\"";
    if (in_tree) out += ", class=\"tree\", style=bold";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

inline std::string render_path(const Path& p) {
  std::string out = "path:";
  for (const auto& n : p.nodes()) out += " " + n;
  out += "\ncost: " + format_number(p.total_cost) + "\n";
  return out;
}

inline std::string render_tour(const Tour& t) {
  std::string out = "stops:";
  for (const auto& s : t.stops) out += " " + s;
  out += "\nwalk:";
  for (const auto& n : t.walk()) out += " " + n;
  out += "\ncost: " + format_number(t.total_cost) + "\n";
  return out;
}

inline std::string render_stats(const PathStats& s) {
  return "mean_geodesic=" + format_number(s.mean_geodesic) + "\n" +
         "diameter=" + format_number(s.diameter) + "\n" +
         "reachable_pairs=" + std::to_string(s.reachable_pairs) + "\n" +
         "unreachable_pairs=" + std::to_string(s.unreachable_pairs) + "\n";
}

}  // namespace wayfinder
