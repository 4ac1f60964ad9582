// Builds a small street network, prints the worksheet table from A, then the
// route to F.

#include <iostream>

#include "wayfinder/wayfinder.hpp"

int main() {
  using namespace wayfinder;

  Graph g = parse_edge_list(
      "undirected\n"
      "A B 4\nA C 2\nB C 1\nB D 5\nC D 8\nC E 10\nD E 2\nD F 6\nE F 3\n");

  auto result = run_dijkstra(g, "A");
  std::cout << render_table(result.table) << "\n";
  std::cout << render_path(extract_path(g, result.tree, "F"));
}
