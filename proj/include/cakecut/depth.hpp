#pragma once

// Halfspace depth of points with respect to a cake, best cuts, depth level
// sets, the maximin (centerpoint) search, and the Helly feasibility check.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cakecut/cake.hpp"
#include "cakecut/error.hpp"
#include "cakecut/geometry.hpp"

namespace cakecut {

// The halfspace anchor + l_direction = {y : <y, direction> >= <anchor, direction>}
// and the cake fraction it contains.
struct Cut {
  Vector anchor;
  UnitDirection direction;
  double fraction = 0.0;
};

Cut make_cut(const Cake& c, const Vector& anchor, const UnitDirection& direction);

enum class DepthMethod {
  Exact1D,       // both half-lines evaluated exactly
  ExactSweep2D,  // critical-angle sweep with per-interval refinement
  SampledSphere, // sphere lattice + local refinement; no lower-bound claim
};

const char* depth_method_name(DepthMethod m);

struct DepthCertificate {
  Vector point;
  double lower = 0.0;
  double upper = 0.0;
  Cut witness;
  DepthMethod method = DepthMethod::ExactSweep2D;
};

inline constexpr double kSweepTolerance = 1e-6;
inline constexpr std::size_t kSphereLatticeSize = 4096;

DepthCertificate depth_at(const Cake& c, const Vector& x);

// Low-discrepancy point set on the unit sphere S^{dim-1}: evenly spaced
// angles in 2D, a Fibonacci lattice in 3D, Gaussian-mapped Halton points above.
std::vector<UnitDirection> sphere_lattice(int dim, std::size_t count);

// Minimum of the tail at x over the given directions followed by local
// coordinate descent on the sphere from the best `refine` of them.
Cut minimize_tail_on_sphere(const Cake& c, const Vector& x, std::span<const UnitDirection> starts,
                            std::size_t refine = 16, double step_tol = 1e-8);

enum class CutMode { MinPiece, MaxPiece };

Cut best_cut(const Cake& c, const Vector& x, CutMode mode);

// Outer approximation of {x : depth(x) >= t}: the inflated bounding box
// clipped by {<x, a> <= quantile(c, a, t)} for each direction.
ConvexRegion level_set(const Cake& c, double t, std::span<const UnitDirection> directions);

struct MaximinResult {
  Vector point;
  double lower = 0.0;
  double upper = 0.0;
  int rounds = 0;
  bool inside_cake = false;
  std::vector<UnitDirection> directions;
};

class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(MaximinResult best);
  const MaximinResult& best() const { return best_; }

 private:
  MaximinResult best_;
};

inline constexpr int kMaximinMaxRounds = 200;

// Cutting-direction search for argmax depth. Requires dim in {1, 2, 3} and
// tol >= 1e-4. Guarantees lower <= max depth <= upper (in 3D the lower value
// is the sampled depth estimate of the returned point).
MaximinResult maximin_point(const Cake& c, double tol);

struct HellyReport {
  std::vector<UnitDirection> directions;
  double epsilon = 0.0;
  double level = 0.0;
  std::optional<Vector> witness;
  bool feasible = false;
  bool witness_in_cake = false;
  // Tail at the witness for each listed direction.
  std::vector<double> witness_tails;
};

inline constexpr double kDefaultHellyEpsilon = 1e-6;

// Intersects {<x, c_i> <= quantile(c, c_i, 1/(n+1) - epsilon)} over exactly
// n+1 directions.
HellyReport helly_certificate(const Cake& c, std::span<const UnitDirection> directions,
                              double epsilon = kDefaultHellyEpsilon);

// Same construction at an arbitrary level t instead of 1/(n+1) - epsilon.
HellyReport helly_at_level(const Cake& c, std::span<const UnitDirection> directions, double level);

}  // namespace cakecut
