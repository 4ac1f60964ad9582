#pragma once

// A student's step-by-step run of the worksheet algorithm. The student
// proposes one worksheet action at a time; each proposal is judged against
// the algorithm and applied only if it is a legal next step.
//
// Round structure (Step 1 is done by start_session):
//   selecting : select_current(v) for any unshaded v tied at the minimum dist
//   relaxing  : set_label(w, dist, last) once for every unshaded neighbor w of
//               Current, then shade_current(Current)
//   done      : finish; no unshaded node carries a dist

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wayfinder/dijkstra.hpp"
#include "wayfinder/edge_list.hpp"
#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"

namespace wayfinder {

enum class MoveKind { select_current, set_label, shade_current, finish };
enum class Phase { selecting, relaxing, done };

constexpr std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::select_current: return "select_current";
    case MoveKind::set_label: return "set_label";
    case MoveKind::shade_current: return "shade_current";
    case MoveKind::finish: return "finish";
  }
  return "";
}

constexpr std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::selecting: return "selecting";
    case Phase::relaxing: return "relaxing";
    case Phase::done: return "done";
  }
  return "";
}

struct Move {
  MoveKind kind = MoveKind::finish;
  std::optional<NodeId> node;
  std::optional<double> dist;
  std::optional<NodeId> last;

  static Move select_current(NodeId n) { return {MoveKind::select_current, std::move(n), {}, {}}; }
  static Move set_label(NodeId n, double d, NodeId from) {
    return {MoveKind::set_label, std::move(n), d, std::move(from)};
  }
  static Move shade_current(NodeId n) { return {MoveKind::shade_current, std::move(n), {}, {}}; }
  static Move finish() { return {MoveKind::finish, {}, {}, {}}; }

  friend bool operator==(const Move&, const Move&) = default;
};

struct Verdict {
  bool accepted = false;
  std::string explanation;
  /// For rejections, a move that would have been accepted.
  std::optional<Move> expected;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct HistoryEntry {
  Move move;
  Verdict verdict;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

class Session {
public:
  static Session start(std::shared_ptr<const Graph> graph, std::string_view origin,
                       std::string id = {}) {
    Session s;
    s.id_ = std::move(id);
    s.graph_ = std::move(graph);
    s.graph_->index_of(origin);
    s.origin_ = NodeId(origin);
    s.table_.origin = s.origin_;
    for (const auto& n : s.graph_->nodes()) s.table_.labels.emplace(n, NodeLabel{});

    auto& root = s.table_.labels.at(s.origin_);
    root.dist = 0.0;
    root.shaded = true;
    for (const auto& nb : s.graph_->neighbors(origin)) {
      auto& label = s.table_.labels.at(nb.node);
      label.dist = nb.cost;
      label.last = s.origin_;
    }
    s.phase_ = s.frontier_empty() ? Phase::done : Phase::selecting;
    return s;
  }

  const std::string& id() const noexcept { return id_; }
  const Graph& graph() const noexcept { return *graph_; }
  std::shared_ptr<const Graph> shared_graph() const noexcept { return graph_; }
  const NodeId& origin() const noexcept { return origin_; }
  const LabelTable& table() const noexcept { return table_; }
  Phase phase() const noexcept { return phase_; }
  const std::optional<NodeId>& current() const noexcept { return current_; }
  /// Unshaded neighbors of Current still awaiting a set_label this round.
  const std::set<NodeId>& unresolved() const noexcept { return unresolved_; }
  const std::vector<HistoryEntry>& history() const noexcept { return history_; }

  /// Judges `move` and applies it when accepted. Rejected moves leave the
  /// session untouched (nothing is recorded). Throws MalformedMove when
  /// required fields are missing or name unknown nodes, and SessionDone for
  /// anything but `finish` once the table is complete.
  Verdict submit(const Move& move) {
    check_well_formed(move);
    if (phase_ == Phase::done && move.kind != MoveKind::finish)
      throw Error(ErrorCode::SessionDone, "session is complete; only 'finish' is allowed");

    Verdict v;
    switch (move.kind) {
      case MoveKind::select_current: v = judge_select(*move.node); break;
      case MoveKind::set_label: v = judge_label(*move.node, *move.dist, *move.last); break;
      case MoveKind::shade_current: v = judge_shade(*move.node); break;
      case MoveKind::finish: v = judge_finish(); break;
    }
    if (v.accepted) {
      apply(move);
      history_.push_back({move, v});
    }
    return v;
  }

  /// Every move that would be accepted right now.
  std::vector<Move> legal_moves() const {
    std::vector<Move> out;
    switch (phase_) {
      case Phase::selecting:
        for (const auto& n : tied_minimum()) out.push_back(Move::select_current(n));
        break;
      case Phase::relaxing:
        for (const auto& w : unresolved_) out.push_back(expected_label(w));
        if (unresolved_.empty()) out.push_back(Move::shade_current(*current_));
        break;
      case Phase::done:
        out.push_back(Move::finish());
        break;
    }
    return out;
  }

  friend bool operator==(const Session& a, const Session& b) {
    return a.id_ == b.id_ && *a.graph_ == *b.graph_ && a.origin_ == b.origin_ &&
           a.table_ == b.table_ && a.phase_ == b.phase_ && a.current_ == b.current_ &&
           a.unresolved_ == b.unresolved_ && a.history_ == b.history_;
  }

private:
  Session() = default;

  bool frontier_empty() const {
    return std::none_of(table_.labels.begin(), table_.labels.end(),
                        [](const auto& kv) { return !kv.second.shaded && kv.second.dist; });
  }

  std::vector<NodeId> tied_minimum() const {
    std::optional<double> best;
    for (const auto& [n, label] : table_.labels)
      if (!label.shaded && label.dist && (!best || *label.dist < *best)) best = label.dist;
    std::vector<NodeId> out;
    for (const auto& [n, label] : table_.labels)
      if (!label.shaded && label.dist && *label.dist == *best) out.push_back(n);
    return out;
  }

  Move expected_label(const NodeId& w) const {
    const auto& cur = table_.labels.at(*current_);
    const auto& label = table_.labels.at(w);
    double candidate = *cur.dist + graph_->find_edge(*current_, w)->cost;
    if (!label.dist || candidate < *label.dist) return Move::set_label(w, candidate, *current_);
    return Move::set_label(w, *label.dist, *label.last);
  }

  void check_well_formed(const Move& m) const {
    auto require_node = [&](const std::optional<NodeId>& n, const char* field) {
      if (!n) throw Error(ErrorCode::MalformedMove, std::string(to_string(m.kind)) + " needs '" + field + "'");
      if (!graph_->contains(*n))
        throw Error(ErrorCode::MalformedMove, "unknown node '" + *n + "' in '" + field + "'");
    };
    switch (m.kind) {
      case MoveKind::select_current:
      case MoveKind::shade_current:
        require_node(m.node, "node");
        break;
      case MoveKind::set_label:
        require_node(m.node, "node");
        require_node(m.last, "last");
        if (!m.dist) throw Error(ErrorCode::MalformedMove, "set_label needs 'dist'");
        if (!std::isfinite(*m.dist)) throw Error(ErrorCode::MalformedMove, "dist must be finite");
        break;
      case MoveKind::finish:
        break;
    }
  }

  Verdict reject(std::string why, std::optional<Move> hint) const {
    return {false, std::move(why), std::move(hint)};
  }

  std::optional<Move> first_legal() const {
    auto moves = legal_moves();
    if (moves.empty()) return std::nullopt;
    return moves.front();
  }

  Verdict judge_select(const NodeId& n) const {
    if (phase_ == Phase::relaxing)
      return reject("Current is " + *current_ + "; finish its neighbors and shade it first",
                    first_legal());
    const auto& label = table_.labels.at(n);
    auto best = tied_minimum();
    const double low = *table_.labels.at(best.front()).dist;
    if (label.shaded) return reject(n + " is already shaded", Move::select_current(best.front()));
    if (!label.dist)
      return reject(n + " has a blank dist; only labeled nodes can become Current",
                    Move::select_current(best.front()));
    if (*label.dist != low)
      return reject(best.front() + " has dist " + format_number(low) + ", lower than " + n +
                        "'s dist of " + format_number(*label.dist),
                    Move::select_current(best.front()));
    std::string why = n + " has the lowest dist (" + format_number(low) + ") among unshaded nodes";
    if (best.size() > 1) why += "; tie, any of the tied nodes may be chosen";
    return {true, why, std::nullopt};
  }

  Verdict judge_label(const NodeId& n, double dist, const NodeId& last) const {
    if (phase_ != Phase::relaxing)
      return reject("select a Current node before updating labels", first_legal());
    if (!unresolved_.contains(n)) {
      if (graph_->find_edge(*current_, n) && !table_.labels.at(n).shaded)
        return reject(n + " was already resolved this round", first_legal());
      return reject(n + " is not an unshaded neighbor of Current (" + *current_ + ")",
                    first_legal());
    }
    Move want = expected_label(n);
    const auto& cur = table_.labels.at(*current_);
    double candidate = *cur.dist + graph_->find_edge(*current_, n)->cost;
    if (dist == *want.dist && last == *want.last) {
      if (want.last == current_)
        return {true, n + " updated to dist " + format_number(candidate) + " via " + *current_,
                std::nullopt};
      return {true, n + " keeps dist " + format_number(*want.dist) + " since " +
                        format_number(candidate) + " is not smaller",
              std::nullopt};
    }
    if (want.last == current_)
      return reject(*current_ + "'s dist plus the edge cost gives " +
                        format_number(candidate) + ", so " + n + " should read dist " +
                        format_number(*want.dist) + ", last " + *want.last,
                    want);
    return reject(format_number(candidate) + " is not smaller than " + n + "'s dist of " +
                      format_number(*want.dist) + "; the label must stay unchanged",
                  want);
  }

  Verdict judge_shade(const NodeId& n) const {
    if (phase_ != Phase::relaxing) return reject("there is no Current node to shade", first_legal());
    if (n != *current_) return reject("only Current (" + *current_ + ") can be shaded now",
                                      first_legal());
    if (!unresolved_.empty())
      return reject("neighbor " + *unresolved_.begin() + " of " + n + " has not been resolved yet",
                    first_legal());
    return {true, n + " shaded; its dist is final", std::nullopt};
  }

  Verdict judge_finish() const {
    if (phase_ != Phase::done)
      return reject("unshaded nodes with a dist remain", first_legal());
    return {true, "every reachable node is shaded; the last edges form a shortest-path spanning tree",
            std::nullopt};
  }

  void apply(const Move& m) {
    switch (m.kind) {
      case MoveKind::select_current: {
        current_ = *m.node;
        phase_ = Phase::relaxing;
        unresolved_.clear();
        for (const auto& nb : graph_->neighbors(*m.node))
          if (!table_.labels.at(nb.node).shaded) unresolved_.insert(nb.node);
        break;
      }
      case MoveKind::set_label: {
        auto& label = table_.labels.at(*m.node);
        label.dist = *m.dist;
        label.last = *m.last;
        unresolved_.erase(*m.node);
        break;
      }
      case MoveKind::shade_current: {
        table_.labels.at(*current_).shaded = true;
        current_.reset();
        phase_ = frontier_empty() ? Phase::done : Phase::selecting;
        break;
      }
      case MoveKind::finish:
        break;
    }
  }

  std::string id_;
  std::shared_ptr<const Graph> graph_;
  NodeId origin_;
  LabelTable table_;
  Phase phase_ = Phase::selecting;
  std::optional<NodeId> current_;
  std::set<NodeId> unresolved_;
  std::vector<HistoryEntry> history_;
};

inline Session start_session(const Graph& g, std::string_view origin, std::string id = {}) {
  return Session::start(std::make_shared<const Graph>(g), origin, std::move(id));
}

inline std::pair<Session, Verdict> submit_move(Session s, const Move& move) {
  Verdict v = s.submit(move);
  return {std::move(s), std::move(v)};
}

inline DijkstraResult reveal_solution(const Session& s) { return run_dijkstra(s.graph(), s.origin()); }

/// Rebuilds a session by resubmitting `moves` in order; throws if any is rejected.
inline Session replay(std::shared_ptr<const Graph> graph, std::string_view origin,
                      std::span<const Move> moves, std::string id = {}) {
  Session s = Session::start(std::move(graph), origin, std::move(id));
  for (const auto& m : moves) {
    if (!s.submit(m).accepted)
      throw Error(ErrorCode::ValidationError, "replayed move was rejected");
  }
  return s;
}

}  // namespace wayfinder
