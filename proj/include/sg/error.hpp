#ifndef SG_ERROR_HPP
#define SG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sg {

enum class ErrorCode {
  DimensionTooLarge,
  DisconnectedFamily,
  ParseError,
  IndexOutOfRange,
  GeodesicExplosion,
  Unreachable,
  MalformedWitness,
  Disconnected,
  DiameterTooSmall,
  SizeLimitExceeded,
  OutOfRange,
  AssignmentInfeasible,
  Usage,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DisconnectedFamily: return "DisconnectedFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GeodesicExplosion: return "GeodesicExplosion";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::MalformedWitness: return "MalformedWitness";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AssignmentInfeasible: return "AssignmentInfeasible";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a structured payload and an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sg

#endif
