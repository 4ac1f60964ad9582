#pragma once

// HTTP JSON API for workbench sessions, independent of any transport.
// A server adapter feeds (method, path, body) in and writes the status and
// body out; tests call Api::handle directly.
//
//   POST /sessions                {"graph": edge-list text | graph JSON, "origin": id}
//                                 (or {"fixture": name, "origin": id})  -> 201 {"id", "state"}
//   GET  /sessions/{id}                                                   -> 200 {"state"}
//   POST /sessions/{id}/moves     {"move": move}                          -> 200 {"verdict", "state"}
//   GET  /sessions/{id}/solution                                          -> 200 {"table", "tree", ...}
//   GET  /graphs/fixtures                                                 -> 200 [{"name","format","content"}]
//
// Failures return {"error": {"code", "message", "status"}} with one of the
// codes in ApiErrorCode.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wayfinder/edge_list.hpp"
#include "wayfinder/error.hpp"
#include "wayfinder/json_io.hpp"
#include "wayfinder/session.hpp"

namespace wayfinder {

enum class ApiErrorCode {
  PARSE_ERROR,
  INVALID_GRAPH,
  UNKNOWN_NODE,
  BAD_REQUEST,
  BAD_MOVE,
  UNKNOWN_SESSION,
  SESSION_DONE,
  NOT_FOUND,
  INTERNAL,
};

constexpr std::string_view to_string(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::PARSE_ERROR: return "PARSE_ERROR";
    case ApiErrorCode::INVALID_GRAPH: return "INVALID_GRAPH";
    case ApiErrorCode::UNKNOWN_NODE: return "UNKNOWN_NODE";
    case ApiErrorCode::BAD_REQUEST: return "BAD_REQUEST";
    case ApiErrorCode::BAD_MOVE: return "BAD_MOVE";
    case ApiErrorCode::UNKNOWN_SESSION: return "UNKNOWN_SESSION";
    case ApiErrorCode::SESSION_DONE: return "SESSION_DONE";
    case ApiErrorCode::NOT_FOUND: return "NOT_FOUND";
    case ApiErrorCode::INTERNAL: return "INTERNAL";
  }
  return "INTERNAL";
}

constexpr int http_status(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::UNKNOWN_SESSION:
    case ApiErrorCode::NOT_FOUND: return 404;
    case ApiErrorCode::SESSION_DONE: return 409;
    case ApiErrorCode::INTERNAL: return 500;
    default: return 400;
  }
}

struct ApiError {
  ApiErrorCode code = ApiErrorCode::INTERNAL;
  std::string message;

  int status() const { return http_status(code); }
  json to_json() const {
    return {{"error", {{"code", to_string(code)}, {"message", message}, {"status", status()}}}};
  }
};

inline ApiErrorCode api_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return ApiErrorCode::PARSE_ERROR;
    case ErrorCode::UnknownNode: return ApiErrorCode::UNKNOWN_NODE;
    case ErrorCode::UnknownSession: return ApiErrorCode::UNKNOWN_SESSION;
    case ErrorCode::MalformedMove: return ApiErrorCode::BAD_MOVE;
    case ErrorCode::SessionDone: return ApiErrorCode::SESSION_DONE;
    case ErrorCode::DuplicateNode:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::DanglingEndpoint:
    case ErrorCode::NegativeCost:
    case ErrorCode::SelfLoop:
    case ErrorCode::InvalidNodeId:
    case ErrorCode::ValidationError: return ApiErrorCode::INVALID_GRAPH;
    default: return ApiErrorCode::BAD_REQUEST;
  }
}

struct ApiRequest {
  std::string method;
  std::string path;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  json body;

  /// Wire form: pretty-printed, sorted keys, trailing newline.
  std::string text() const { return body.dump(2) + "\n"; }
};

struct Fixture {
  std::string name;
  std::string format;  // "edge-list" | "city-map" | "grid"
  std::string content;
};

/// Shipped fixtures in `dir`, sorted by file name.
inline std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<Fixture> out;
  if (dir.empty() || !std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::string format = ext == ".edges" ? "edge-list" : ext == ".json" ? "city-map"
                       : ext == ".grid"  ? "grid" : "";
    if (format.empty()) continue;
    out.push_back({entry.path().filename().string(), format, read_text_file(entry.path())});
  }
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return out;
}

/// In-memory sessions. Lookups share the index lock; each session has its
/// own mutex, so moves on one session serialize while others proceed.
class SessionStore {
public:
  SessionStore() : rng_(std::random_device{}()) {}

  json create(std::shared_ptr<const Graph> graph, std::string_view origin) {
    std::unique_lock lock(index_mu_);
    std::string id;
    do {
      id = fresh_id();
    } while (slots_.contains(id));
    auto slot = std::make_shared<Slot>(Session::start(std::move(graph), origin, id));
    slots_.emplace(id, slot);
    return session_to_json(slot->session);
  }

  /// Runs `fn(Session&)` with exclusive access to one session.
  template <typename Fn>
  auto with_session(const std::string& id, Fn&& fn) {
    auto slot = find(id);
    std::lock_guard lock(slot->mu);
    return fn(slot->session);
  }

  std::size_t size() const {
    std::shared_lock lock(index_mu_);
    return slots_.size();
  }

  json snapshot() const {
    std::vector<std::shared_ptr<Slot>> slots;
    {
      std::shared_lock lock(index_mu_);
      for (const auto& [id, slot] : slots_) slots.push_back(slot);
    }
    json out = {{"sessions", json::array()}};
    for (const auto& slot : slots) {
      std::lock_guard lock(slot->mu);
      out["sessions"].push_back(session_to_json(slot->session));
    }
    return out;
  }

  void restore(const json& snapshot) {
    std::unique_lock lock(index_mu_);
    for (const auto& state : snapshot.at("sessions")) {
      Session s = session_from_json(state);
      auto id = s.id();
      slots_.insert_or_assign(id, std::make_shared<Slot>(std::move(s)));
    }
  }

private:
  struct Slot {
    explicit Slot(Session s) : session(std::move(s)) {}
    std::mutex mu;
    Session session;
  };

  std::shared_ptr<Slot> find(const std::string& id) const {
    std::shared_lock lock(index_mu_);
    auto it = slots_.find(id);
    if (it == slots_.end()) throw Error(ErrorCode::UnknownSession, "no session '" + id + "'");
    return it->second;
  }

  std::string fresh_id() {
    static constexpr char hex[] = "0123456789abcdef";
    auto bits = rng_();
    std::string id;
    for (int i = 0; i < 16; ++i, bits >>= 4) id += hex[bits & 0xf];
    return id;
  }

  mutable std::shared_mutex index_mu_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
  std::mt19937_64 rng_;
};

class Api {
public:
  explicit Api(std::filesystem::path fixtures_dir = {}) : fixtures_dir_(std::move(fixtures_dir)) {}

  SessionStore& store() noexcept { return store_; }

  ApiResponse handle(const ApiRequest& req) {
    try {
      return route(req);
    } catch (const ApiException& e) {
      return {e.error.status(), e.error.to_json()};
    } catch (const Error& e) {
      ApiError err{api_code_for(e.code()), e.what()};
      return {err.status(), err.to_json()};
    } catch (const std::exception& e) {
      ApiError err{ApiErrorCode::INTERNAL, e.what()};
      return {err.status(), err.to_json()};
    }
  }

private:
  struct ApiException {
    ApiError error;
  };

  [[noreturn]] static void fail(ApiErrorCode code, std::string message) {
    throw ApiException{{code, std::move(message)}};
  }

  static std::vector<std::string> segments(std::string_view path) {
    if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < path.size()) {
      auto slash = path.find('/', pos);
      auto part = path.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
      if (!part.empty()) out.emplace_back(part);
      if (slash == std::string_view::npos) break;
      pos = slash + 1;
    }
    return out;
  }

  static json parse_body(const std::string& body) {
    try {
      return json::parse(body);
    } catch (const json::parse_error& e) {
      fail(ApiErrorCode::PARSE_ERROR, std::string("request body is not valid JSON: ") + e.what());
    }
  }

  ApiResponse route(const ApiRequest& req) {
    auto parts = segments(req.path);
    const auto& m = req.method;

    if (parts.size() == 2 && parts[0] == "graphs" && parts[1] == "fixtures" && m == "GET")
      return list_fixtures();
    if (!parts.empty() && parts[0] == "sessions") {
      if (parts.size() == 1 && m == "POST") return create_session(req.body);
      if (parts.size() == 2 && m == "GET")
        return store_.with_session(parts[1], [](Session& s) {
          return ApiResponse{200, {{"state", session_to_json(s)}}};
        });
      if (parts.size() == 3 && parts[2] == "moves" && m == "POST") return post_move(parts[1], req.body);
      if (parts.size() == 3 && parts[2] == "solution" && m == "GET")
        return store_.with_session(parts[1], [](Session& s) {
          return ApiResponse{200, solution_to_json(reveal_solution(s))};
        });
    }
    fail(ApiErrorCode::NOT_FOUND, "no route for " + m + " " + req.path);
  }

  ApiResponse list_fixtures() const {
    json out = json::array();
    for (const auto& f : load_fixtures(fixtures_dir_))
      out.push_back({{"name", f.name}, {"format", f.format}, {"content", f.content}});
    return {200, out};
  }

  Graph graph_from_request(const json& body) const {
    if (body.contains("fixture")) {
      if (!body["fixture"].is_string()) fail(ApiErrorCode::BAD_REQUEST, "'fixture' must be a string");
      auto name = body["fixture"].get<std::string>();
      for (const auto& f : load_fixtures(fixtures_dir_)) {
        if (f.name != name) continue;
        if (f.format == "edge-list") return parse_edge_list(f.content);
        fail(ApiErrorCode::BAD_REQUEST, "fixture '" + name + "' is not an edge list");
      }
      fail(ApiErrorCode::BAD_REQUEST, "no fixture named '" + name + "'");
    }
    if (!body.contains("graph")) fail(ApiErrorCode::BAD_REQUEST, "missing 'graph'");
    const auto& g = body["graph"];
    if (g.is_string()) return parse_edge_list(g.get<std::string>());
    if (g.is_object()) return graph_from_json(g);
    fail(ApiErrorCode::BAD_REQUEST, "'graph' must be edge-list text or a graph object");
  }

  ApiResponse create_session(const std::string& raw) {
    json body = parse_body(raw);
    if (!body.is_object()) fail(ApiErrorCode::BAD_REQUEST, "request body must be an object");
    if (!body.contains("origin") || !body["origin"].is_string())
      fail(ApiErrorCode::BAD_REQUEST, "missing string 'origin'");
    auto graph = std::make_shared<const Graph>(graph_from_request(body));
    json state = store_.create(graph, body["origin"].get<std::string>());
    std::string id = state["id"];
    return {201, {{"id", id}, {"state", std::move(state)}}};
  }

  ApiResponse post_move(const std::string& id, const std::string& raw) {
    return store_.with_session(id, [&](Session& s) {
      json body = parse_body(raw);
      if (!body.is_object() || !body.contains("move")) fail(ApiErrorCode::BAD_MOVE, "missing 'move'");
      Move move = move_from_json(body["move"]);
      Verdict v = s.submit(move);
      return ApiResponse{200, {{"verdict", verdict_to_json(v)}, {"state", session_to_json(s)}}};
    });
  }

  std::filesystem::path fixtures_dir_;
  SessionStore store_;
};

}  // namespace wayfinder
