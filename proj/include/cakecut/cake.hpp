#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cakecut/geometry.hpp"

namespace cakecut {

enum class OverlapMethod {
  Exact1D,         // interval intersection
  ExactClip2D,     // pairwise triangle clipping
  SeparatingFacet, // a facet hyperplane of one piece separates the pair
  MonteCarlo,      // uniform samples of one piece tested against the other's interior
};

const char* overlap_method_name(OverlapMethod m);

struct OverlapEstimate {
  OverlapMethod method = OverlapMethod::ExactClip2D;
  // Intersection measure divided by the measure of the first piece.
  double fraction = 0.0;
  // Three-sigma half-width for MonteCarlo, zero otherwise.
  double three_sigma = 0.0;
  std::size_t samples = 0;
};

// Number of Monte Carlo samples per pair for interior-disjointness in n >= 3.
inline constexpr std::size_t kOverlapSamples = 100000;

OverlapEstimate estimate_overlap(const Simplex& a, const Simplex& b, std::uint64_t seed = 0);

struct ValidationCertificate {
  // MonteCarlo when any pair needed sampling; otherwise the exact method used.
  OverlapMethod method = OverlapMethod::ExactClip2D;
  std::size_t samples_per_pair = 0;
  std::size_t sampled_pairs = 0;
  double max_overlap = 0.0;
};

// A union of interior-disjoint simplices of one dimension. Immutable.
class Cake {
 public:
  int dim() const { return dim_; }
  const std::vector<Simplex>& pieces() const { return pieces_; }
  double measure() const { return measure_; }
  const Vector& bbox_lo() const { return lo_; }
  const Vector& bbox_hi() const { return hi_; }
  double bbox_diagonal() const { return (hi_ - lo_).norm(); }
  const ValidationCertificate& certificate() const { return certificate_; }
  // Distinct vertices over all pieces.
  const std::vector<Vector>& vertices() const { return vertices_; }

  // Fraction in {y : <y, a> >= offset}. `direction` need not be normalized.
  double tail(std::span<const double> direction, double offset) const;

  // Measure-weighted average of piece centroids.
  Vector centroid() const;
  bool contains(const Vector& p, double tol = 1e-9) const;

  Cake translated(const Vector& v) const;

 private:
  friend Cake validate_cake(std::vector<Simplex> pieces);

  int dim_ = 0;
  std::vector<Simplex> pieces_;
  double measure_ = 0.0;
  Vector lo_;
  Vector hi_;
  ValidationCertificate certificate_;
  std::vector<Vector> vertices_;
};

struct TailQuery {
  UnitDirection direction;
  double offset = 0.0;
};

// Validates pieces and certifies pairwise interior-disjointness. Throws
// EmptyCake, MixedDimensions or OverlappingPieces (OverlappingPiecesError).
Cake validate_cake(std::vector<Simplex> pieces);

double measure(const Cake& c);

double tail(const Cake& c, const TailQuery& q);

// Offset s with tail(c, (a, s)) == t, by bisection over the cake's support.
// Throws InvalidArgument unless 0 < t < 1.
double quantile(const Cake& c, const UnitDirection& a, double t);

// i.i.d. uniform points on the cake; deterministic in `seed`.
std::vector<Vector> sample_points(const Cake& c, std::size_t count, std::uint64_t seed);

}  // namespace cakecut
