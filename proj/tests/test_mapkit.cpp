#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "wayfinder/dijkstra.hpp"
#include "wayfinder/edge_list.hpp"
#include "wayfinder/mapkit.hpp"

using namespace wayfinder;

namespace {

CityMap city() { return parse_city_map(read_text_file(std::string(WAYFINDER_FIXTURES_DIR) + "/citymap.json")); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidParams;
}

double route_cost(const GridGraph& gg, char a, char b) {
  auto run = run_dijkstra(gg.graph, gg.node_for(a));
  return run.tree.dist.at(gg.node_for(b));
}

}  // namespace

TEST(CityMap, AnswerKeyPathsValidate) {
  auto g = to_graph(city());
  for (const std::vector<std::string>& names :
       {std::vector<std::string>{"Main", "Elm", "Scholar"},
        std::vector<std::string>{"Main", "Oak", "Palm", "Scholar"},
        std::vector<std::string>{"Pine", "Maple", "Scholar"}}) {
    auto p = path_from_street_names(g, "green_house", names);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->destination, "school");
    EXPECT_TRUE(validate_path(g, *p));
  }
  std::vector<std::string> nonsense{"Main", "Maple"};
  EXPECT_FALSE(path_from_street_names(g, "green_house", nonsense));
}

TEST(CityMap, StreetNamesSurviveOnEdges) {
  auto g = to_graph(city());
  ASSERT_NE(g.find_edge_by_name("Scholar"), nullptr);
  EXPECT_EQ(g.find_edge("school", "2")->name, "Scholar");
}

TEST(CityMap, MinimalAndInvalidMaps) {
  auto single = parse_city_map(R"({"places":[{"id":"home","name":"Home"}],"intersections":[],"streets":[]})");
  EXPECT_EQ(to_graph(single).node_count(), 1u);

  EXPECT_EQ(code_of([] {
              parse_city_map(R"({"places":[{"id":"a","name":"A"}],"intersections":[],
                                 "streets":[{"name":"X","from":"a","to":"9","length":1}]})");
            }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] {
              parse_city_map(R"({"places":[{"id":"a","name":"A"}],"intersections":["1","2"],
                                 "streets":[{"name":"X","from":"a","to":"1","length":1},
                                            {"name":"X","from":"1","to":"2","length":1}]})");
            }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_city_map("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_city_map(R"({"streets":[{"name":"X"}]})"); }), ErrorCode::ParseError);
}

TEST(CityMap, RoundTripPreservesStreets) {
  auto m = city();
  auto again = parse_city_map(serialize_city_map(m));
  EXPECT_EQ(again, m);
  auto a = to_graph(m), b = to_graph(again);
  EXPECT_EQ(a, b);
}

TEST(Grid, ParseBasics) {
  auto one = parse_grid("O");
  EXPECT_EQ(one.width, 1u);
  EXPECT_EQ(one.height, 1u);
  EXPECT_EQ(one.markers.at('O'), (Cell{0, 0}));

  auto ring = parse_grid("...\n.#.\n...\n");
  EXPECT_EQ(ring.open_cells(), 8u);
  EXPECT_EQ(grid_to_graph(ring).graph.node_count(), 8u);
  EXPECT_EQ(serialize_grid(ring), "...\n.#.\n...\n");
}

TEST(Grid, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_grid("..\n.\n"); }), ErrorCode::RaggedRows);
  EXPECT_EQ(code_of([] { parse_grid("..\n\n..\n"); }), ErrorCode::RaggedRows);
  EXPECT_EQ(code_of([] { parse_grid("A.A"); }), ErrorCode::DuplicateMarker);
  EXPECT_EQ(code_of([] { parse_grid(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_grid(".. \n...\n"); }), ErrorCode::ParseError);
}

TEST(Grid, TwoCellGraph) {
  auto gg = grid_to_graph(parse_grid(".."));
  EXPECT_EQ(gg.graph.node_count(), 2u);
  ASSERT_EQ(gg.graph.edge_count(), 1u);
  EXPECT_EQ(gg.graph.edges()[0].cost, 1);
}

TEST(Grid, IsolatedMarkersAreUnreachable) {
  auto gg = grid_to_graph(parse_grid("O#\n#X"));
  EXPECT_EQ(gg.graph.edge_count(), 0u);
  auto run = run_dijkstra(gg.graph, gg.node_for('O'));
  EXPECT_EQ(code_of([&] { extract_path(gg.graph, run.tree, gg.node_for('X')); }), ErrorCode::Unreachable);
}

TEST(Grid, RoutesAroundAWall) {
  const std::vector<std::string> rows{"O....", "...#.", "...#.", "...#.", "...#X"};
  std::string text;
  for (const auto& r : rows) text += r + "\n";
  auto gm = parse_grid(text);
  auto gg = grid_to_graph(gm);
  auto run = run_dijkstra(gg.graph, gg.node_for('O'));
  auto path = extract_path(gg.graph, run.tree, gg.node_for('X'));
  EXPECT_EQ(path.total_cost, oracle::grid_bfs(rows, {0, 0}, {4, 4}));
  EXPECT_EQ(path.total_cost, 8);
  for (const auto& n : path.nodes())
    for (std::size_t r = 0; r < gm.height; ++r)
      for (std::size_t c = 0; c < gm.width; ++c)
        if (gm.is_blocked(r, c)) {
          EXPECT_NE(n, cell_node_id(r, c));
        }
}

TEST(Grid, OpenGridsGiveManhattanDistance) {
  for (std::size_t n = 1; n <= 20; ++n) {
    std::string text;
    for (std::size_t r = 0; r < n; ++r) {
      std::string row(n, '.');
      if (r == 0) row[0] = 'O';
      if (r == n - 1) row[n - 1] = n == 1 ? 'O' : 'X';
      text += row + "\n";
    }
    auto gg = grid_to_graph(parse_grid(text));
    if (n == 1) continue;
    EXPECT_EQ(route_cost(gg, 'O', 'X'), 2.0 * (n - 1));
  }
}

TEST(Grid, ShippedSupermarketMatchesBfs) {
  auto text = read_text_file(std::string(WAYFINDER_FIXTURES_DIR) + "/supermarket.grid");
  auto gm = parse_grid(text);
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < gm.height; ++r) rows.push_back(text.substr(r * (gm.width + 1), gm.width));
  auto o = gm.markers.at('O'), x = gm.markers.at('X');
  auto expected = oracle::grid_bfs(rows, {int(o.row), int(o.col)}, {int(x.row), int(x.col)});
  EXPECT_EQ(route_cost(grid_to_graph(gm), 'O', 'X'), expected);
}
