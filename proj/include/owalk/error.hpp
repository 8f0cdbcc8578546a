#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace owalk {

enum class ErrorKind {
  // graph-core
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  UnknownExample,
  ParseError,
  // spectral
  EigensolverFailure,
  AmbiguousGrouping,
  NonRealResult,
  // arithmetic
  InconsistentExactCheck,
  // support-cospectral
  DegenerateProjection,
  SupportMismatch,
  // periodicity
  DisconnectedGraph,
  // autos
  SearchBudgetExceeded,
  // transfer
  NotStronglyCospectral,
  NotCospectral,
  NotPeriodic,
  NoValidM,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries the module-level kind so the
// CLI can map it onto an exit code and name it in messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Internal inconsistencies, as opposed to bad input or analysis-negative
// outcomes.
bool is_internal(ErrorKind kind);

}  // namespace owalk
