#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace domroots {

enum class ErrorKind {
  InvalidEdge,
  SelfLoop,
  InvalidVertex,
  InvalidGraph,
  ParseError,
  TooLarge,
  Invalid,
  NoConvergence,
  HypothesisNotMet,
  InvalidSpec,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Invalid: return "Invalid";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed graph6 input; `offset` is the byte position of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::ParseError, what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace domroots
