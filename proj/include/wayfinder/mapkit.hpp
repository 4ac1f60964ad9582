#pragma once

// Map ingestion: named-street city maps (JSON) and ASCII grid maps.
//
// City map schema:
//   {"places":        [{"id": "green_house", "name": "Green house"}, ...],
//    "intersections": ["1", "2", ...],
//    "streets":       [{"name": "Main", "from": "green_house", "to": "1", "length": 3}, ...]}
//
// Grid rows are newline separated with no trailing spaces. '.' is open,
// '#' is blocked, any other printable character marks a named open cell.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"

namespace wayfinder {

struct Place {
  NodeId id;
  std::string name;

  friend bool operator==(const Place&, const Place&) = default;
};

struct Street {
  std::string name;
  NodeId from;
  NodeId to;
  double length = 0.0;

  friend bool operator==(const Street&, const Street&) = default;
};

struct CityMap {
  std::vector<Place> places;
  std::vector<NodeId> intersections;
  std::vector<Street> streets;

  friend bool operator==(const CityMap&, const CityMap&) = default;
};

/// Streets become undirected edges named after the street.
inline Graph to_graph(const CityMap& map) {
  std::vector<NodeId> nodes;
  for (const auto& p : map.places) nodes.push_back(p.id);
  nodes.insert(nodes.end(), map.intersections.begin(), map.intersections.end());
  std::vector<Edge> edges;
  for (const auto& s : map.streets) edges.push_back({s.from, s.to, s.length, s.name});
  return Graph::build(std::move(nodes), std::move(edges), Directedness::undirected);
}

inline void validate_city_map(const CityMap& map) {
  std::set<std::string> names;
  for (const auto& s : map.streets)
    if (!names.insert(s.name).second)
      throw Error(ErrorCode::ValidationError, "duplicate street '" + s.name + "'");
  try {
    to_graph(map);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, e.what());
  }
}

inline CityMap parse_city_map(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("city map is not valid JSON: ") + e.what());
  }

  CityMap map;
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "city map must be a JSON object");
    for (const auto& p : doc.value("places", nlohmann::json::array()))
      map.places.push_back({p.at("id").get<std::string>(), p.value("name", p.at("id").get<std::string>())});
    for (const auto& i : doc.value("intersections", nlohmann::json::array()))
      map.intersections.push_back(i.get<std::string>());
    for (const auto& s : doc.value("streets", nlohmann::json::array()))
      map.streets.push_back({s.at("name").get<std::string>(), s.at("from").get<std::string>(),
                             s.at("to").get<std::string>(), s.at("length").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("city map schema: ") + e.what());
  }
  validate_city_map(map);
  return map;
}

inline std::string serialize_city_map(const CityMap& map) {
  nlohmann::json doc;
  doc["places"] = nlohmann::json::array();
  for (const auto& p : map.places) doc["places"].push_back({{"id", p.id}, {"name", p.name}});
  doc["intersections"] = map.intersections;
  doc["streets"] = nlohmann::json::array();
  for (const auto& s : map.streets)
    doc["streets"].push_back({{"name", s.name}, {"from", s.from}, {"to", s.to}, {"length", s.length}});
  return doc.dump(2) + "\n";
}

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct GridMap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<bool> blocked;  // row-major
  std::map<char, Cell> markers;

  bool is_blocked(std::size_t row, std::size_t col) const { return blocked.at(row * width + col); }
  void set_blocked(std::size_t row, std::size_t col, bool value) { blocked.at(row * width + col) = value; }

  std::size_t open_cells() const {
    std::size_t n = 0;
    for (bool b : blocked) n += b ? 0 : 1;
    return n;
  }
};

inline GridMap parse_grid(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "grid is empty");

  GridMap gm;
  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (row == 0) gm.width = line.size();
    if (line.size() != gm.width || line.empty())
      throw Error(ErrorCode::RaggedRows, "row " + std::to_string(row) + " has " +
                                             std::to_string(line.size()) + " cells, expected " +
                                             std::to_string(gm.width));
    for (std::size_t col = 0; col < line.size(); ++col) {
      char c = line[col];
      if (c == '#') {
        gm.blocked.push_back(true);
        continue;
      }
      gm.blocked.push_back(false);
      if (c == '.') continue;
      if (c < 0x21 || c > 0x7e)
        throw Error(ErrorCode::ParseError, "unexpected character at row " + std::to_string(row) +
                                               ", column " + std::to_string(col));
      if (!gm.markers.emplace(c, Cell{row, col}).second)
        throw Error(ErrorCode::DuplicateMarker, std::string("marker '") + c + "' appears twice");
    }
    ++row;
  }
  gm.height = row;
  return gm;
}

inline std::string serialize_grid(const GridMap& gm) {
  std::string out;
  for (std::size_t r = 0; r < gm.height; ++r) {
    for (std::size_t c = 0; c < gm.width; ++c) out += gm.is_blocked(r, c) ? '#' : '.';
    out += '\n';
  }
  for (const auto& [label, cell] : gm.markers) out[cell.row * (gm.width + 1) + cell.col] = label;
  return out;
}

inline NodeId cell_node_id(std::size_t row, std::size_t col) {
  return "r" + std::to_string(row) + "c" + std::to_string(col);
}

struct GridGraph {
  Graph graph;
  std::map<char, NodeId> markers;

  const NodeId& node_for(char label) const {
    auto it = markers.find(label);
    if (it == markers.end())
      throw Error(ErrorCode::UnknownNode, std::string("no marker '") + label + "' on the grid");
    return it->second;
  }
};

/// One node per open cell, unit-cost edges between 4-adjacent open cells.
inline GridGraph grid_to_graph(const GridMap& gm) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < gm.height; ++r) {
    for (std::size_t c = 0; c < gm.width; ++c) {
      if (gm.is_blocked(r, c)) continue;
      nodes.push_back(cell_node_id(r, c));
      if (c + 1 < gm.width && !gm.is_blocked(r, c + 1))
        edges.push_back({cell_node_id(r, c), cell_node_id(r, c + 1), 1.0, std::nullopt});
      if (r + 1 < gm.height && !gm.is_blocked(r + 1, c))
        edges.push_back({cell_node_id(r, c), cell_node_id(r + 1, c), 1.0, std::nullopt});
    }
  }
  GridGraph out{Graph::build(std::move(nodes), std::move(edges)), {}};
  for (const auto& [label, cell] : gm.markers) out.markers.emplace(label, cell_node_id(cell.row, cell.col));
  return out;
}

}  // namespace wayfinder
