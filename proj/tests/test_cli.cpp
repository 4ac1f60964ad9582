#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wayfinder/cli.hpp"

using namespace wayfinder;

namespace {

const std::string kFixtures = WAYFINDER_FIXTURES_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, SptTable) {
  auto r = cli({"spt", "--graph", fixture("fig2.edges"), "--origin", "A", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "node  dist  last  shaded\n"
            "A     0     -     yes\n"
            "B     3     C     yes\n"
            "C     2     A     yes\n"
            "D     8     B     yes\n"
            "E     10    D     yes\n"
            "F     13    E     yes\n");
}

TEST(Cli, SptDotMarksTreeEdges) {
  auto r = cli({"spt", "--graph", fixture("fig2.edges"), "--origin", "A", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("graph spt {"), std::string::npos);
  EXPECT_NE(r.out.find("\"C\" -- \"B\" [label=\"1\", class=\"tree\", style=bold]"), std::string::npos);
  std::size_t tree_edges = 0;
  for (auto pos = r.out.find("class=\"tree\""); pos != std::string::npos; pos = r.out.find("class=\"tree\"", pos + 1))
    ++tree_edges;
  EXPECT_EQ(tree_edges, 5u);
}

TEST(Cli, SptJsonRoundTrips) {
  auto r = cli({"spt", "--graph", fixture("fig2.edges"), "--origin", "A", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  EXPECT_EQ(solution_to_json(solution_from_json(doc)).dump(2) + "\n", r.out);
}

TEST(Cli, RouteCases) {
  auto same = cli({"route", "--graph", fixture("fig2.edges"), "--from", "A", "--to", "A"});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out, "path: A\ncost: 0\n");

  auto far = cli({"route", "--graph", fixture("fig2.edges"), "--from", "A", "--to", "F"});
  EXPECT_EQ(far.out, "path: A C B D E F\ncost: 13\n");

  auto gone = cli({"route", "--graph", fixture("disconnected.edges"), "--from", "A", "--to", "Z"});
  EXPECT_EQ(gone.code, 1);
  EXPECT_NE(gone.err.find("unreachable"), std::string::npos);

  auto all = cli({"route", "--graph", fixture("diamond.edges"), "--from", "A", "--to", "D", "--all"});
  EXPECT_EQ(all.out, "path: A B D\ncost: 2\npath: A C D\ncost: 2\n");

  auto capped = cli({"route", "--graph", fixture("diamond.edges"), "--from", "A", "--to", "D", "--all",
                     "--cap", "1", "--format", "json"});
  auto doc = json::parse(capped.out);
  EXPECT_EQ(doc["paths"].size(), 1u);
  EXPECT_FALSE(doc["complete"]);

  auto json_path = cli({"route", "--graph", fixture("fig2.edges"), "--from", "A", "--to", "F", "--format", "json"});
  EXPECT_EQ(path_to_json(path_from_json(json::parse(json_path.out))).dump(2) + "\n", json_path.out);
}

TEST(Cli, RouteOnCityMap) {
  auto r = cli({"route", "--graph", fixture("citymap.json"), "--from", "green_house", "--to", "school"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("school"), std::string::npos);
}

TEST(Cli, Tour) {
  auto exact = cli({"tour", "--graph", fixture("fig2.edges"), "--home", "A", "--visit", "C,F"});
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_EQ(exact.out, "stops: A C F A\nwalk: A C B D E F E D B C A\ncost: 26\n");

  auto greedy = cli({"tour", "--graph", fixture("fig2.edges"), "--home", "A", "--greedy", "--format", "json"});
  ASSERT_EQ(greedy.code, 0);
  auto doc = json::parse(greedy.out);
  EXPECT_EQ(tour_to_json(tour_from_json(doc)).dump(2) + "\n", greedy.out);

  auto split = cli({"tour", "--graph", fixture("disconnected.edges"), "--home", "A", "--visit", "Z"});
  EXPECT_EQ(split.code, 1);

  auto both = cli({"tour", "--graph", fixture("fig2.edges"), "--home", "A", "--exact", "--greedy"});
  EXPECT_EQ(both.code, 2);
}

TEST(Cli, GridRoute) {
  auto r = cli({"grid", "route", "--map", fixture("supermarket.grid"), "--from", "O", "--to", "X"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cost: 16\n"), std::string::npos);
  EXPECT_NE(r.out.find('*'), std::string::npos);

  auto blocked = temp_file("wayfinder_blocked.grid", "O#\n#X\n");
  EXPECT_EQ(cli({"grid", "route", "--map", blocked, "--from", "O", "--to", "X"}).code, 1);
  EXPECT_EQ(cli({"grid", "route", "--map", blocked, "--from", "O", "--to", "Q"}).code, 2);
}

TEST(Cli, StatsFormats) {
  auto text = cli({"stats", "--graph", fixture("diamond.edges")});
  ASSERT_EQ(text.code, 0);
  EXPECT_EQ(text.out, "mean_geodesic=1.3333333333333333\ndiameter=2\nreachable_pairs=12\nunreachable_pairs=0\n");
  auto js = cli({"stats", "--graph", fixture("diamond.edges"), "--format", "json"});
  EXPECT_EQ(stats_to_json(stats_from_json(json::parse(js.out))).dump(2) + "\n", js.out);
}

TEST(Cli, GenLatticeIsDeterministic) {
  auto a = cli({"gen", "lattice", "--n", "30", "--k", "2", "--shortcuts", "10", "--seed", "1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, read_text_file(std::string(WAYFINDER_GOLDEN_DIR) + "/lattice_n30_k2_s10_seed1.edges"));
  EXPECT_EQ(cli({"gen", "lattice", "--n", "5", "--k", "3"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"spt", "--graph", fixture("fig2.edges")}).code, 2);
  EXPECT_EQ(cli({"spt", "--graph", "/nonexistent.edges", "--origin", "A"}).code, 2);
  EXPECT_EQ(cli({"spt", "--graph", fixture("fig2.edges"), "--origin", "Q"}).code, 2);
  EXPECT_EQ(cli({"spt", "--graph", fixture("fig2.edges"), "--origin", "A", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}
