#pragma once

// The extremal star body A = union of (a_i - S) over the vertices a_i of a
// regular simplex S, and numerical checks of its structure and depth.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cakecut/cake.hpp"
#include "cakecut/geometry.hpp"

namespace cakecut {

inline constexpr int kMaxStarDimension = 8;

// Regular simplex in R^n with unit circumradius and centroid at the origin.
// Throws DimensionOutOfRange unless 1 <= n <= 8.
Simplex regular_simplex(int n);

// Vertices a_0..a_n of regular_simplex(n), in construction order.
std::vector<Vector> regular_simplex_vertices(int n);

struct StarBody {
  int n = 0;
  std::vector<Vector> vertices;  // a_0..a_n
  Simplex simplex;               // S
  std::vector<Simplex> pieces;   // S_i = a_i - S
  Cake cake;
  double alpha = 0.0;            // common <a_i, a_j>, i != j
};

StarBody star_body(int n);

struct StarStructureReport {
  double measure_ratio = 0.0;
  double max_pairwise_overlap = 0.0;
  // Largest three-sigma Monte Carlo bound (zero for exact methods).
  double overlap_bound = 0.0;
  OverlapMethod method = OverlapMethod::ExactClip2D;
  bool origin_in_all = false;
};

StarStructureReport verify_star_structure(const StarBody& sb, std::uint64_t seed = 0);

struct StarDepthReport {
  double min_tail_over_S = 0.0;
  double sphere_min_tail = 0.0;
  std::optional<std::pair<double, double>> maximin_bracket;
  std::optional<Vector> maximin_point;
};

// Maximin tolerance used for star bodies: 1e-3 in 2D, 5e-3 in 3D.
double star_maximin_tolerance(int n);

StarDepthReport verify_star_depth(const StarBody& sb, std::size_t barycentric_samples,
                                  std::size_t sphere_samples, std::uint64_t seed);

struct TheoremCheck {
  std::string name;
  std::string expected;
  double value = 0.0;
  bool pass = false;
};

// Structure and depth checks of the star body against 1/(n+1): measure ratio
// n+1 (relative 1e-12), zero pairwise overlap, alpha = -1/n, exact tails over
// directions in S at least 1/(n+1) - 1e-9, and for n <= 3 the sphere minimum
// within [1/(n+1) - 1e-9, 1/(n+1) + 1e-3] and the maximin bracket within the
// star tolerance of 1/(n+1).
std::vector<TheoremCheck> verify_theorem(int n, std::size_t barycentric_samples = 4096,
                                         std::size_t sphere_samples = 4096, std::uint64_t seed = 0);

}  // namespace cakecut
