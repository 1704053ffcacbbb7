#include "cakecut/extremal.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "cakecut/depth.hpp"
#include "cakecut/error.hpp"

namespace cakecut {

std::vector<Vector> regular_simplex_vertices(int n) {
  if (n < 1 || n > kMaxStarDimension) {
    throw Error(ErrorCode::DimensionOutOfRange,
                "regular simplex dimension must be in [1, " + std::to_string(kMaxStarDimension) + "], got " +
                    std::to_string(n));
  }
  // Orthonormal basis of the hyperplane sum(x) = 0 in R^{n+1}:
  //   u_k = (0,..,0, n-k, -1,..,-1) / sqrt((n-k)(n-k+1)),  k = 0..n-1,
  // with n-k at position k. The centered basis vectors e_i - 1/(n+1) have
  // coordinates u_k[i] in it and norm sqrt(n/(n+1)).
  const double rescale = std::sqrt(static_cast<double>(n + 1) / n);
  std::vector<Vector> out;
  for (int i = 0; i <= n; ++i) {
    Vector a = Vector::zeros(n);
    for (int k = 0; k < n; ++k) {
      const double m = n - k;
      const double norm = std::sqrt(m * (m + 1.0));
      double entry = 0.0;
      if (i == k) {
        entry = m;
      } else if (i > k) {
        entry = -1.0;
      }
      a[k] = entry / norm * rescale;
    }
    out.push_back(std::move(a));
  }
  return out;
}

Simplex regular_simplex(int n) { return Simplex(regular_simplex_vertices(n)); }

StarBody star_body(int n) {
  std::vector<Vector> vertices = regular_simplex_vertices(n);
  Simplex simplex(vertices);
  std::vector<Simplex> pieces;
  for (const Vector& ai : vertices) {
    std::vector<Vector> reflected;
    for (const Vector& ak : vertices) reflected.push_back(ai - ak);
    pieces.emplace_back(std::move(reflected));
  }
  Cake cake = validate_cake(pieces);
  const double alpha = dot(vertices[0], vertices[1]);
  return StarBody{n, std::move(vertices), std::move(simplex), std::move(pieces), std::move(cake), alpha};
}

StarStructureReport verify_star_structure(const StarBody& sb, std::uint64_t seed) {
  StarStructureReport report;
  report.measure_ratio = sb.cake.measure() / sb.simplex.volume();
  report.method = sb.n == 1 ? OverlapMethod::Exact1D
                            : (sb.n == 2 ? OverlapMethod::ExactClip2D : OverlapMethod::SeparatingFacet);
  for (std::size_t i = 0; i < sb.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < sb.pieces.size(); ++j) {
      const OverlapEstimate est = estimate_overlap(sb.pieces[i], sb.pieces[j], seed + i * 131 + j);
      if (est.method == OverlapMethod::MonteCarlo) report.method = OverlapMethod::MonteCarlo;
      report.max_pairwise_overlap = std::max(report.max_pairwise_overlap, est.fraction);
      report.overlap_bound = std::max(report.overlap_bound, est.three_sigma);
    }
  }
  const Vector origin = Vector::zeros(sb.n);
  report.origin_in_all = true;
  for (const Simplex& piece : sb.pieces) report.origin_in_all &= piece.contains(origin, 1e-12);
  return report;
}

double star_maximin_tolerance(int n) { return n == 3 ? 5e-3 : 1e-3; }

StarDepthReport verify_star_depth(const StarBody& sb, std::size_t barycentric_samples,
                                  std::size_t sphere_samples, std::uint64_t seed) {
  if (barycentric_samples < 1 || sphere_samples < 1) {
    throw Error(ErrorCode::InvalidArgument, "sample counts must be >= 1");
  }
  StarDepthReport report;
  const int n = sb.n;
  const Vector origin = Vector::zeros(n);

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  report.min_tail_over_S = INFINITY;
  for (std::size_t s = 0; s < barycentric_samples;) {
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    double total = 0.0;
    for (double& x : w) {
      x = expo(rng);
      total += x;
    }
    Vector a = Vector::zeros(n);
    for (int i = 0; i <= n; ++i) a += sb.vertices[static_cast<std::size_t>(i)] * (w[static_cast<std::size_t>(i)] / total);
    if (a.norm() < 1e-12) continue;
    const UnitDirection dir = normalize(a);
    report.min_tail_over_S = std::min(report.min_tail_over_S, sb.cake.tail(dir.coords(), 0.0));
    ++s;
  }

  const std::vector<UnitDirection> starts = sphere_lattice(n, sphere_samples);
  report.sphere_min_tail = minimize_tail_on_sphere(sb.cake, origin, starts).fraction;

  if (n <= 3) {
    MaximinResult result;
    try {
      result = maximin_point(sb.cake, star_maximin_tolerance(n));
    } catch (const NoConvergenceError& e) {
      result = e.best();
    }
    report.maximin_bracket = std::make_pair(result.lower, result.upper);
    report.maximin_point = result.point;
  }
  return report;
}

std::vector<TheoremCheck> verify_theorem(int n, std::size_t barycentric_samples, std::size_t sphere_samples,
                                         std::uint64_t seed) {
  const StarBody sb = star_body(n);
  const double bound = 1.0 / (n + 1);
  const std::string b = "1/" + std::to_string(n + 1);
  std::vector<TheoremCheck> checks;

  const StarStructureReport structure = verify_star_structure(sb, seed);
  checks.push_back({"measure_ratio", std::to_string(n + 1) + " (rel 1e-12)", structure.measure_ratio,
                    std::abs(structure.measure_ratio - (n + 1)) <= 1e-12 * (n + 1)});
  const bool exact = structure.method != OverlapMethod::MonteCarlo;
  checks.push_back({"max_pairwise_overlap", exact ? "0 (exact)" : "<= 3 sigma of 0", structure.max_pairwise_overlap,
                    exact ? structure.max_pairwise_overlap == 0.0
                          : structure.max_pairwise_overlap <= structure.overlap_bound});
  checks.push_back({"origin_in_all_pieces", "1", structure.origin_in_all ? 1.0 : 0.0, structure.origin_in_all});
  if (n >= 2) {
    checks.push_back({"alpha", "-1/" + std::to_string(n) + " (abs 1e-12)", sb.alpha,
                      std::abs(sb.alpha + 1.0 / n) <= 1e-12});
  }

  const StarDepthReport depth = verify_star_depth(sb, barycentric_samples, sphere_samples, seed);
  checks.push_back({"min_tail_over_S", ">= " + b + " - 1e-9", depth.min_tail_over_S,
                    depth.min_tail_over_S >= bound - 1e-9});
  if (n <= 3) {
    checks.push_back({"sphere_min_tail", "in [" + b + " - 1e-9, " + b + " + 1e-3]", depth.sphere_min_tail,
                      depth.sphere_min_tail >= bound - 1e-9 && depth.sphere_min_tail <= bound + 1e-3});
  }
  if (depth.maximin_bracket) {
    const double tol = star_maximin_tolerance(n);
    const auto [lower, upper] = *depth.maximin_bracket;
    std::ostringstream tol_text;
    tol_text << tol;
    checks.push_back({"maximin_lower", ">= " + b + " - " + tol_text.str(), lower, lower >= bound - tol});
    checks.push_back({"maximin_upper", "<= " + b + " + " + tol_text.str(), upper, upper <= bound + tol});
    checks.push_back({"maximin_bracket_contains_bound", "lower <= " + b + " <= upper", upper - lower,
                      lower <= bound && bound <= upper});
  }
  return checks;
}

}  // namespace cakecut
