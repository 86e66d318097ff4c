#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locascope {

enum class ErrorCode {
  InvalidEdge,
  DegreeBoundExceeded,
  NotConnected,
  RadiusMismatch,
  VertexSetMismatch,
  ComponentTooLarge,
  WeightsNotNormalized,
  NoMatchWithinTolerance,
  InfeasibleSpec,
  DuplicateLabel,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code so the
/// CLI can map it onto its JSON error envelope.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the tester when the nearest database entry is still farther than
/// the match tolerance; the best distance is kept for reporting.
class NoMatchError : public Error {
 public:
  NoMatchError(const std::string& message, std::string best_label, double best_distance)
      : Error(ErrorCode::NoMatchWithinTolerance, message),
        best_label_(std::move(best_label)),
        best_distance_(best_distance) {}

  const std::string& best_label() const noexcept { return best_label_; }
  double best_distance() const noexcept { return best_distance_; }

 private:
  std::string best_label_;
  double best_distance_;
};

}  // namespace locascope
