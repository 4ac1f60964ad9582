#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "wayfinder/edge_list.hpp"
#include "wayfinder/json_io.hpp"
#include "wayfinder/session.hpp"

using namespace wayfinder;

namespace {

Graph fig2() { return parse_edge_list(read_text_file(std::string(WAYFINDER_FIXTURES_DIR) + "/fig2.edges")); }

std::map<NodeId, std::optional<double>> dist_column(const LabelTable& t) {
  std::map<NodeId, std::optional<double>> out;
  for (const auto& [n, l] : t.labels) out[n] = l.dist;
  return out;
}

std::string state_of(const Session& s) { return session_to_json(s).dump(); }

Session self_play(Session s, std::mt19937& rng) {
  while (true) {
    auto moves = s.legal_moves();
    EXPECT_FALSE(moves.empty());
    const Move m = moves[rng() % moves.size()];
    auto v = s.submit(m);
    EXPECT_TRUE(v.accepted) << v.explanation;
    if (m.kind == MoveKind::finish) return s;
  }
}

}  // namespace

TEST(StartSession, StepOneIsPrecompleted) {
  auto s = start_session(fig2(), "A");
  EXPECT_EQ(s.phase(), Phase::selecting);
  const auto& t = s.table().labels;
  EXPECT_EQ(t.at("A"), (NodeLabel{0.0, std::nullopt, true}));
  EXPECT_EQ(t.at("B"), (NodeLabel{4.0, "A", false}));
  EXPECT_EQ(t.at("C"), (NodeLabel{2.0, "A", false}));
  for (const char* n : {"D", "E", "F"}) EXPECT_EQ(t.at(n), NodeLabel{});
}

TEST(StartSession, DegenerateGraphsAreDoneImmediately) {
  EXPECT_EQ(start_session(build_graph({"A"}, {}), "A").phase(), Phase::done);
  auto s = start_session(build_graph({"A", "B"}, {}), "A");
  EXPECT_EQ(s.phase(), Phase::done);
  EXPECT_FALSE(s.table().labels.at("B").dist);
  EXPECT_THROW(start_session(build_graph({"A"}, {}), "Q"), Error);
}

TEST(SubmitMove, SelectLowestDist) {
  auto s = start_session(fig2(), "A");
  auto before = state_of(s);
  auto bad = s.submit(Move::select_current("B"));
  EXPECT_FALSE(bad.accepted);
  EXPECT_NE(bad.explanation.find("C"), std::string::npos);
  EXPECT_EQ(bad.expected, Move::select_current("C"));
  EXPECT_EQ(state_of(s), before);

  auto good = s.submit(Move::select_current("C"));
  EXPECT_TRUE(good.accepted);
  EXPECT_EQ(s.phase(), Phase::relaxing);
  EXPECT_EQ(s.current(), "C");
  EXPECT_EQ(s.unresolved(), (std::set<NodeId>{"B", "D", "E"}));
}

TEST(SubmitMove, BlankAndShadedCandidatesRejected) {
  auto s = start_session(fig2(), "A");
  EXPECT_FALSE(s.submit(Move::select_current("A")).accepted);
  EXPECT_FALSE(s.submit(Move::select_current("F")).accepted);
}

TEST(SubmitMove, EitherTiedNodeAccepted) {
  auto g = build_graph({"A", "B", "C", "D"},
                       {{"A", "B", 2, {}}, {"A", "C", 2, {}}, {"B", "D", 1, {}}, {"C", "D", 3, {}}});
  for (const char* pick : {"B", "C"}) {
    auto s = start_session(g, "A");
    auto v = s.submit(Move::select_current(pick));
    EXPECT_TRUE(v.accepted) << pick;
  }
}

TEST(SubmitMove, RelaxationRules) {
  auto s = start_session(fig2(), "A");
  ASSERT_TRUE(s.submit(Move::select_current("C")).accepted);

  // Shading before all neighbors are resolved.
  auto early = s.submit(Move::shade_current("C"));
  EXPECT_FALSE(early.accepted);
  ASSERT_TRUE(early.expected);
  EXPECT_EQ(early.expected->kind, MoveKind::set_label);

  // 2 + 1 = 3 < 4: B improves via C.
  auto wrong = s.submit(Move::set_label("B", 7, "C"));
  EXPECT_FALSE(wrong.accepted);
  EXPECT_EQ(wrong.expected, Move::set_label("B", 3, "C"));
  EXPECT_FALSE(s.submit(Move::set_label("B", 3, "A")).accepted);
  EXPECT_TRUE(s.submit(Move::set_label("B", 3, "C")).accepted);
  EXPECT_FALSE(s.submit(Move::set_label("B", 3, "C")).accepted) << "already resolved";

  // Not a neighbor of C.
  EXPECT_FALSE(s.submit(Move::set_label("F", 1, "C")).accepted);
  // A is shaded and never needs resolving.
  EXPECT_FALSE(s.submit(Move::set_label("A", 0, "C")).accepted);

  EXPECT_TRUE(s.submit(Move::set_label("D", 10, "C")).accepted);
  EXPECT_TRUE(s.submit(Move::set_label("E", 12, "C")).accepted);
  EXPECT_FALSE(s.submit(Move::shade_current("B")).accepted);
  EXPECT_TRUE(s.submit(Move::shade_current("C")).accepted);
  EXPECT_EQ(s.phase(), Phase::selecting);

  ASSERT_TRUE(s.submit(Move::select_current("B")).accepted);
  // 3 + 5 = 8 < 10 via B.
  EXPECT_TRUE(s.submit(Move::set_label("D", 8, "B")).accepted);
  ASSERT_TRUE(s.submit(Move::shade_current("B")).accepted);
  ASSERT_TRUE(s.submit(Move::select_current("D")).accepted);
  ASSERT_TRUE(s.submit(Move::set_label("E", 10, "D")).accepted);
  ASSERT_TRUE(s.submit(Move::set_label("F", 14, "D")).accepted);
  ASSERT_TRUE(s.submit(Move::shade_current("D")).accepted);
  ASSERT_TRUE(s.submit(Move::select_current("E")).accepted);
  ASSERT_TRUE(s.submit(Move::set_label("F", 13, "E")).accepted);
  ASSERT_TRUE(s.submit(Move::shade_current("E")).accepted);
  ASSERT_TRUE(s.submit(Move::select_current("F")).accepted);
  EXPECT_TRUE(s.unresolved().empty());
  ASSERT_TRUE(s.submit(Move::shade_current("F")).accepted);
  EXPECT_EQ(s.phase(), Phase::done);
  EXPECT_TRUE(s.submit(Move::finish()).accepted);
  EXPECT_EQ(s.table(), reveal_solution(s).table);
}

TEST(SubmitMove, NoChangeMustBeAcknowledged) {
  // From B (dist 1), C via B costs 1 + 5 = 6, not better than 2.
  auto g = build_graph({"A", "B", "C"}, {{"A", "B", 1, {}}, {"A", "C", 2, {}}, {"B", "C", 5, {}}});
  auto s = start_session(g, "A");
  ASSERT_TRUE(s.submit(Move::select_current("B")).accepted);
  EXPECT_EQ(s.unresolved(), (std::set<NodeId>{"C"}));
  EXPECT_FALSE(s.submit(Move::shade_current("B")).accepted);
  auto v = s.submit(Move::set_label("C", 6, "B"));
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.expected, Move::set_label("C", 2, "A"));
  EXPECT_TRUE(s.submit(Move::set_label("C", 2, "A")).accepted);
  EXPECT_TRUE(s.submit(Move::shade_current("B")).accepted);
}

TEST(SubmitMove, FinishAndDonePhase) {
  auto s = start_session(fig2(), "A");
  EXPECT_FALSE(s.submit(Move::finish()).accepted);

  auto tiny = start_session(build_graph({"A"}, {}), "A");
  EXPECT_TRUE(tiny.submit(Move::finish()).accepted);
  try {
    tiny.submit(Move::select_current("A"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SessionDone);
  }
}

TEST(SubmitMove, MalformedMoves) {
  auto s = start_session(fig2(), "A");
  auto before = state_of(s);
  for (const Move& m : {Move{MoveKind::select_current, {}, {}, {}},
                        Move{MoveKind::set_label, "B", {}, "C"},
                        Move{MoveKind::set_label, "B", 3.0, {}},
                        Move{MoveKind::select_current, "Q", {}, {}},
                        Move{MoveKind::set_label, "B", 3.0, "Q"},
                        Move{MoveKind::set_label, "B", NAN, "C"}}) {
    try {
      s.submit(m);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedMove);
    }
  }
  EXPECT_EQ(state_of(s), before);
}

TEST(SubmitMove, FunctionalWrapperLeavesInputUntouched) {
  auto s = start_session(fig2(), "A");
  auto [next, v] = submit_move(s, Move::select_current("C"));
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(s.phase(), Phase::selecting);
  EXPECT_EQ(next.phase(), Phase::relaxing);
}

TEST(RevealSolution, PureAndMatchesEngine) {
  auto s = start_session(fig2(), "A");
  auto fresh = reveal_solution(s);
  s.submit(Move::select_current("C"));
  s.submit(Move::set_label("B", 3, "C"));
  auto before = state_of(s);
  auto mid = reveal_solution(s);
  EXPECT_EQ(state_of(s), before);
  EXPECT_EQ(fresh.table, mid.table);
  EXPECT_EQ(fresh.tree, run_dijkstra(fig2(), "A").tree);

  auto single = reveal_solution(start_session(build_graph({"A"}, {}), "A"));
  EXPECT_EQ(single.table.labels.size(), 1u);
}

TEST(SessionProperties, SelfPlayCompletesAndMatchesEngine) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    auto sg = oracle::random_graph(rng, 1, 8, 0, 3, 0.45, trial % 4 == 0);
    auto g = oracle::to_graph(sg);
    auto s = self_play(start_session(g, "A"), rng);
    EXPECT_EQ(s.phase(), Phase::done);
    auto engine = run_dijkstra(g, "A");
    EXPECT_EQ(dist_column(s.table()), dist_column(engine.table));
    for (const auto& [n, l] : s.table().labels) EXPECT_EQ(l.shaded, engine.table.labels.at(n).shaded);
  }
}

TEST(SessionProperties, ReplayReproducesState) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = std::make_shared<const Graph>(oracle::to_graph(oracle::random_graph(rng, 2, 7, 1, 3, 0.5)));
    auto s = self_play(Session::start(g, "A", "id"), rng);
    std::vector<Move> moves;
    for (const auto& h : s.history()) moves.push_back(h.move);
    auto again = replay(g, "A", moves, "id");
    EXPECT_EQ(again, s);
    EXPECT_EQ(session_from_json(session_to_json(s)), s);
  }
}

TEST(SessionProperties, RejectedMovesNeverMutate) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    auto sg = oracle::random_graph(rng, 2, 7, 0, 4, 0.5);
    auto s = start_session(oracle::to_graph(sg), "A");
    while (s.phase() != Phase::done) {
      // Throw a random (possibly legal) move at it, then make progress.
      Move probe;
      switch (rng() % 3) {
        case 0: probe = Move::select_current(oracle::name(rng() % sg.n)); break;
        case 1: probe = Move::set_label(oracle::name(rng() % sg.n), rng() % 12, oracle::name(rng() % sg.n)); break;
        default: probe = Move::shade_current(oracle::name(rng() % sg.n)); break;
      }
      auto before = state_of(s);
      Session copy = s;
      if (!copy.submit(probe).accepted) {
        EXPECT_EQ(state_of(copy), before);
      }
      s.submit(s.legal_moves().front());
    }
  }
}
