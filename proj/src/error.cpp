#include "owalk/error.hpp"

namespace owalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EigensolverFailure: return "EigensolverFailure";
    case ErrorKind::AmbiguousGrouping: return "AmbiguousGrouping";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::InconsistentExactCheck: return "InconsistentExactCheck";
    case ErrorKind::DegenerateProjection: return "DegenerateProjection";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotStronglyCospectral: return "NotStronglyCospectral";
    case ErrorKind::NotCospectral: return "NotCospectral";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::NoValidM: return "NoValidM";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

bool is_internal(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EigensolverFailure:
    case ErrorKind::AmbiguousGrouping:
    case ErrorKind::NonRealResult:
    case ErrorKind::InconsistentExactCheck:
    case ErrorKind::DegenerateProjection:
    case ErrorKind::SupportMismatch:
    case ErrorKind::VerificationFailed:
      return true;
    default:
      return false;
  }
}

}  // namespace owalk
