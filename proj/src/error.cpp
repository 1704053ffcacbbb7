#include "cakecut/error.hpp"

#include <sstream>

namespace cakecut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDirection: return "zero_direction";
    case ErrorCode::DegenerateSimplex: return "degenerate_simplex";
    case ErrorCode::UnsupportedDimension: return "unsupported_dimension";
    case ErrorCode::SelfIntersecting: return "self_intersecting";
    case ErrorCode::WrongOrientation: return "wrong_orientation";
    case ErrorCode::DegeneratePolygon: return "degenerate_polygon";
    case ErrorCode::EmptyCake: return "empty_cake";
    case ErrorCode::MixedDimensions: return "mixed_dimensions";
    case ErrorCode::OverlappingPieces: return "overlapping_pieces";
    case ErrorCode::WrongDirectionCount: return "wrong_direction_count";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::DimensionOutOfRange: return "dimension_out_of_range";
    case ErrorCode::StrategyDimensionMismatch: return "strategy_dimension_mismatch";
    case ErrorCode::EmptySuite: return "empty_suite";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::BindFailure: return "bind_failure";
  }
  return "unknown";
}

namespace {

std::string overlap_message(std::size_t first, std::size_t second, double overlap) {
  std::ostringstream os;
  os << "pieces " << first << " and " << second << " overlap (overlap fraction " << overlap
     << ")";
  return os.str();
}

}  // namespace

OverlappingPiecesError::OverlappingPiecesError(std::size_t first, std::size_t second,
                                               double overlap)
    : Error(ErrorCode::OverlappingPieces, overlap_message(first, second, overlap)),
      first_(first),
      second_(second),
      overlap_(overlap) {}

}  // namespace cakecut
