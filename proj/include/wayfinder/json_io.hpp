#pragma once

// JSON shapes shared by the CLI (--format json) and the HTTP API.
//
//   graph   {"directed": bool, "nodes": [id...], "edges": [{"from","to","cost","name"?}...]}
//   path    {"origin","destination","nodes": [id...], "edges": [...], "total_cost"}
//   table   [{"node","dist": number|null,"last": id|null,"shaded": bool}...]  (sorted by node)
//   tree    {"origin","parent": {id: id}, "dist": {id: number}}
//   move    {"kind": "select_current"|"set_label"|"shade_current"|"finish",
//            "node"?, "dist"?, "last"?}
//   verdict {"accepted": bool, "explanation": str, "expected": move|null}
//   session {"id","origin","phase","current": id|null,"unresolved": [id...],
//            "table": table, "graph": graph, "history": [{"move","verdict"}...]}
//   tour    {"home","stops": [id...],"walk": [id...],"legs": [path...],"total_cost"}
//   stats   {"mean_geodesic","diameter","reachable_pairs","unreachable_pairs"}
//
// Objects are emitted with sorted keys, so dumps are byte-stable.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wayfinder/analysis.hpp"
#include "wayfinder/dijkstra.hpp"
#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"
#include "wayfinder/planners.hpp"
#include "wayfinder/session.hpp"

namespace wayfinder {

using json = nlohmann::json;

namespace detail {

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename Fn>
auto parse_guard(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline json edge_to_json(const Edge& e) {
  json j = {{"from", e.from}, {"to", e.to}, {"cost", e.cost}};
  if (e.name) j["name"] = *e.name;
  return j;
}

inline Edge edge_from_json(const json& j) {
  Edge e{j.at("from").get<std::string>(), j.at("to").get<std::string>(), j.at("cost").get<double>(),
         std::nullopt};
  if (j.contains("name") && !j.at("name").is_null()) e.name = j.at("name").get<std::string>();
  return e;
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_to_json(e));
  return {{"directed", g.directed()},
          {"nodes", std::vector<NodeId>(g.nodes().begin(), g.nodes().end())},
          {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  auto [nodes, edges, mode] = detail::parse_guard("graph", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(edge_from_json(e));
    std::vector<NodeId> nodes = j.value("nodes", std::vector<NodeId>{});
    if (!j.contains("nodes")) {
      for (const auto& e : edges) {
        nodes.push_back(e.from);
        nodes.push_back(e.to);
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    }
    auto mode = j.value("directed", false) ? Directedness::directed : Directedness::undirected;
    return std::tuple{nodes, edges, mode};
  });
  return Graph::build(std::move(nodes), std::move(edges), mode);
}

inline json path_to_json(const Path& p) {
  json edges = json::array();
  for (const auto& e : p.edges) edges.push_back(edge_to_json(e));
  return {{"origin", p.origin},
          {"destination", p.destination},
          {"nodes", p.nodes()},
          {"edges", edges},
          {"total_cost", p.total_cost}};
}

inline Path path_from_json(const json& j) {
  return detail::parse_guard("path", [&] {
    Path p;
    p.origin = j.at("origin").get<std::string>();
    p.destination = j.at("destination").get<std::string>();
    for (const auto& e : j.at("edges")) p.edges.push_back(edge_from_json(e));
    p.total_cost = j.at("total_cost").get<double>();
    return p;
  });
}

inline json table_to_json(const LabelTable& t) {
  json rows = json::array();
  for (const auto& [node, label] : t.labels)
    rows.push_back({{"node", node},
                    {"dist", detail::optional_to_json(label.dist)},
                    {"last", detail::optional_to_json(label.last)},
                    {"shaded", label.shaded}});
  return rows;
}

inline LabelTable table_from_json(const json& rows, NodeId origin) {
  return detail::parse_guard("table", [&] {
    LabelTable t;
    t.origin = std::move(origin);
    for (const auto& r : rows) {
      NodeLabel label;
      if (!r.at("dist").is_null()) label.dist = r.at("dist").get<double>();
      if (!r.at("last").is_null()) label.last = r.at("last").get<std::string>();
      label.shaded = r.at("shaded").get<bool>();
      t.labels.emplace(r.at("node").get<std::string>(), label);
    }
    return t;
  });
}

inline json tree_to_json(const SpanningTree& t) {
  return {{"origin", t.origin}, {"parent", t.parent}, {"dist", t.dist}};
}

inline SpanningTree tree_from_json(const json& j) {
  return detail::parse_guard("tree", [&] {
    SpanningTree t;
    t.origin = j.at("origin").get<std::string>();
    t.parent = j.at("parent").get<std::map<NodeId, NodeId>>();
    t.dist = j.at("dist").get<std::map<NodeId, double>>();
    return t;
  });
}

inline json solution_to_json(const DijkstraResult& r) {
  return {{"origin", r.table.origin},
          {"table", table_to_json(r.table)},
          {"tree", tree_to_json(r.tree)},
          {"selections", r.selections}};
}

inline DijkstraResult solution_from_json(const json& j) {
  return detail::parse_guard("solution", [&] {
    DijkstraResult r;
    r.table = table_from_json(j.at("table"), j.at("origin").get<std::string>());
    r.tree = tree_from_json(j.at("tree"));
    r.selections = j.at("selections").get<std::vector<NodeId>>();
    return r;
  });
}

inline json move_to_json(const Move& m) {
  json j = {{"kind", to_string(m.kind)}};
  if (m.node) j["node"] = *m.node;
  if (m.dist) j["dist"] = *m.dist;
  if (m.last) j["last"] = *m.last;
  return j;
}

/// Shape errors here are the client's fault, so they surface as MalformedMove.
inline Move move_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedMove, "move must be a JSON object");
  Move m;
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "select_current") m.kind = MoveKind::select_current;
    else if (kind == "set_label") m.kind = MoveKind::set_label;
    else if (kind == "shade_current") m.kind = MoveKind::shade_current;
    else if (kind == "finish") m.kind = MoveKind::finish;
    else throw Error(ErrorCode::MalformedMove, "unknown move kind '" + kind + "'");
    if (j.contains("node") && !j["node"].is_null()) m.node = j["node"].get<std::string>();
    if (j.contains("dist") && !j["dist"].is_null()) m.dist = j["dist"].get<double>();
    if (j.contains("last") && !j["last"].is_null()) m.last = j["last"].get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedMove, std::string("malformed move: ") + e.what());
  }
  return m;
}

inline json verdict_to_json(const Verdict& v) {
  return {{"accepted", v.accepted},
          {"explanation", v.explanation},
          {"expected", v.expected ? move_to_json(*v.expected) : json(nullptr)}};
}

inline json session_to_json(const Session& s) {
  json history = json::array();
  for (const auto& h : s.history())
    history.push_back({{"move", move_to_json(h.move)}, {"verdict", verdict_to_json(h.verdict)}});
  return {{"id", s.id()},
          {"origin", s.origin()},
          {"phase", to_string(s.phase())},
          {"current", detail::optional_to_json(s.current())},
          {"unresolved", std::vector<NodeId>(s.unresolved().begin(), s.unresolved().end())},
          {"table", table_to_json(s.table())},
          {"graph", graph_to_json(s.graph())},
          {"history", history}};
}

/// Rebuilds a session from its JSON state by replaying the recorded moves.
inline Session session_from_json(const json& j) {
  auto graph = std::make_shared<const Graph>(graph_from_json(j.at("graph")));
  std::vector<Move> moves;
  for (const auto& h : j.at("history")) moves.push_back(move_from_json(h.at("move")));
  return replay(graph, j.at("origin").get<std::string>(), moves, j.value("id", std::string{}));
}

inline json tour_to_json(const Tour& t) {
  json legs = json::array();
  for (const auto& leg : t.legs) legs.push_back(path_to_json(leg));
  return {{"home", t.stops.empty() ? json(nullptr) : json(t.stops.front())},
          {"stops", t.stops},
          {"walk", t.walk()},
          {"legs", legs},
          {"total_cost", t.total_cost}};
}

inline Tour tour_from_json(const json& j) {
  return detail::parse_guard("tour", [&] {
    Tour t;
    t.stops = j.at("stops").get<std::vector<NodeId>>();
    for (const auto& leg : j.at("legs")) t.legs.push_back(path_from_json(leg));
    t.total_cost = j.at("total_cost").get<double>();
    return t;
  });
}

inline json stats_to_json(const PathStats& s) {
  return {{"mean_geodesic", s.mean_geodesic},
          {"diameter", s.diameter},
          {"reachable_pairs", s.reachable_pairs},
          {"unreachable_pairs", s.unreachable_pairs}};
}

inline PathStats stats_from_json(const json& j) {
  return detail::parse_guard("stats", [&] {
    return PathStats{j.at("mean_geodesic").get<double>(), j.at("diameter").get<double>(),
                     j.at("reachable_pairs").get<std::size_t>(),
                     j.at("unreachable_pairs").get<std::size_t>()};
  });
}

}  // namespace wayfinder
