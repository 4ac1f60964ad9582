#pragma once

// Edge-list text format:
//
//   # comment (a '#' starts a comment anywhere on a line)
//   undirected            <- first non-comment line: `directed` | `undirected`
//   A B 4                 <- FROM TO COST [NAME], single-space separated
//   A C 2 Main
//   Z                     <- a lone token declares an isolated node
//
// COST is a plain decimal literal. Serialization is canonical: edges sorted by
// (from, to), isolated nodes last, costs in shortest round-trip form.

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"

namespace wayfinder {

/// Shortest decimal text that parses back to the same double ("13", "2.5").
inline std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == 'e' || c == 'E' || c == '+';
    if (!ok) return std::nullopt;
  }
  if (text.front() == '+') return std::nullopt;
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value,
                             std::chars_format::general);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(' ', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
  return line;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::optional<Directedness> mode;
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;

    if (!mode) {
      if (line == "undirected") mode = Directedness::undirected;
      else if (line == "directed") mode = Directedness::directed;
      else throw fail("expected 'directed' or 'undirected', got '" + std::string(line) + "'");
      continue;
    }

    auto fields = detail::split_single_spaces(line);
    for (auto f : fields) {
      if (f.empty()) throw fail("fields must be separated by single spaces");
      if (!is_valid_node_id(f)) throw fail("invalid token '" + std::string(f) + "'");
    }
    if (fields.size() == 1) {
      nodes.emplace_back(fields[0]);
      continue;
    }
    if (fields.size() != 3 && fields.size() != 4)
      throw fail("expected FROM TO COST [NAME]");
    auto cost = parse_decimal(fields[2]);
    if (!cost) throw fail("cost '" + std::string(fields[2]) + "' is not a decimal literal");
    Edge e{std::string(fields[0]), std::string(fields[1]), *cost, std::nullopt};
    if (fields.size() == 4) e.name = std::string(fields[3]);
    nodes.push_back(e.from);
    nodes.push_back(e.to);
    edges.push_back(std::move(e));
  }
  if (!mode) throw Error(ErrorCode::ParseError, "missing 'directed'/'undirected' header");

  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return Graph::build(std::move(nodes), std::move(edges), *mode);
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = g.directed() ? "directed\n" : "undirected\n";
  std::vector<bool> touched(g.node_count(), false);
  for (const auto& e : g.edges()) {
    out += e.from + ' ' + e.to + ' ' + format_number(e.cost);
    if (e.name) out += ' ' + *e.name;
    out += '\n';
    touched[g.index_of(e.from)] = true;
    touched[g.index_of(e.to)] = true;
  }
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!touched[i]) out += g.id(i) + '\n';
  }
  return out;
}

}  // namespace wayfinder
