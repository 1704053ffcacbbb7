#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cakecut {

enum class ErrorCode {
  ZeroDirection,
  DegenerateSimplex,
  UnsupportedDimension,
  SelfIntersecting,
  WrongOrientation,
  DegeneratePolygon,
  EmptyCake,
  MixedDimensions,
  OverlappingPieces,
  WrongDirectionCount,
  NoConvergence,
  DimensionOutOfRange,
  StrategyDimensionMismatch,
  EmptySuite,
  ParseError,
  InvalidArgument,
  BindFailure,
};

// Machine-readable snake_case name, also used as the API error code.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class OverlappingPiecesError : public Error {
 public:
  OverlappingPiecesError(std::size_t first, std::size_t second, double overlap);

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }
  // Overlap measure as a fraction of the total (2D) or of the first piece (n >= 3).
  double overlap() const { return overlap_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double overlap_;
};

class ParseError : public Error {
 public:
  // `location` is a byte offset ("byte 17") or a JSON pointer ("/pieces/0/2").
  ParseError(std::string location, const std::string& message)
      : Error(ErrorCode::ParseError, location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace cakecut
