#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wayfinder {

enum class ErrorCode {
  DuplicateNode,
  DuplicateEdge,
  DanglingEndpoint,
  NegativeCost,
  SelfLoop,
  InvalidNodeId,
  UnknownNode,
  Unreachable,
  DisconnectedTerminals,
  TooManyTerminals,
  ParseError,
  ValidationError,
  RaggedRows,
  DuplicateMarker,
  InvalidParams,
  UnknownSession,
  MalformedMove,
  SessionDone,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidNodeId: return "InvalidNodeId";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::DisconnectedTerminals: return "DisconnectedTerminals";
    case ErrorCode::TooManyTerminals: return "TooManyTerminals";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::DuplicateMarker: return "DuplicateMarker";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::MalformedMove: return "MalformedMove";
    case ErrorCode::SessionDone: return "SessionDone";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// front ends (CLI exit codes, HTTP statuses) can map it without parsing text.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace wayfinder
