#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfarey {

enum class ErrorKind {
  EvalAtZero,
  NotExpandable,
  NonIntegral,
  BadConstantTerm,
  NotDivisible,
  DomainError,
  NotNeighbors,
  NoParents,
  NoStabilization,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EvalAtZero: return "EvalAtZero";
    case ErrorKind::NotExpandable: return "NotExpandable";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotNeighbors: return "NotNeighbors";
    case ErrorKind::NoParents: return "NoParents";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `kind()` is the
/// stable, machine-readable part and `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qfarey
