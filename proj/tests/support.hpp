#pragma once

// Random cake generators and oracles that do not go through the engine's
// tail recurrence or clipping code.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cakecut/cake.hpp"
#include "cakecut/geometry.hpp"

namespace testsupport {

using cakecut::Cake;
using cakecut::Simplex;
using cakecut::Vector;
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vector random_unit(Rng& rng, int dim) {
  std::normal_distribution<double> g;
  Vector v = Vector::zeros(dim);
  do {
    for (int i = 0; i < dim; ++i) v[i] = g(rng);
  } while (v.norm() < 1e-3);
  return v * (1.0 / v.norm());
}

// Star-shaped polygon around the origin, fan-triangulated: `k` pieces with
// jittered angles and random radii. Generally non-convex.
inline Cake random_star_cake(Rng& rng, int k) {
  const double step = 2.0 * std::numbers::pi / k;
  const double phase = uniform(rng, 0.0, step);
  std::vector<Vector> rim;
  for (int i = 0; i < k; ++i) {
    const double angle = phase + i * step + uniform(rng, -0.2, 0.2) * step;
    const double r = uniform(rng, 0.3, 1.5);
    rim.push_back(Vector{r * std::cos(angle), r * std::sin(angle)});
  }
  std::vector<Simplex> pieces;
  for (int i = 0; i < k; ++i) pieces.emplace_back(std::vector<Vector>{Vector{0.0, 0.0}, rim[i], rim[(i + 1) % k]});
  return cakecut::validate_cake(std::move(pieces));
}

inline Cake random_star_cake(Rng& rng) {
  return random_star_cake(rng, std::uniform_int_distribution<int>(3, 12)(rng));
}

// Convex polygon inscribed in an ellipse, fanned from its vertex centroid.
inline Cake random_convex_cake(Rng& rng) {
  const int k = std::uniform_int_distribution<int>(3, 12)(rng);
  std::vector<double> angles;
  for (int i = 0; i < k; ++i) angles.push_back(uniform(rng, 0.0, 2.0 * std::numbers::pi));
  std::sort(angles.begin(), angles.end());
  const double sx = uniform(rng, 0.5, 2.0);
  const double sy = uniform(rng, 0.5, 2.0);
  std::vector<Vector> rim;
  Vector center = Vector::zeros(2);
  for (double a : angles) {
    rim.push_back(Vector{sx * std::cos(a), sy * std::sin(a)});
    center += rim.back() * (1.0 / k);
  }
  std::vector<Simplex> pieces;
  for (int i = 0; i < k; ++i) {
    try {
      pieces.emplace_back(std::vector<Vector>{center, rim[i], rim[(i + 1) % k]});
    } catch (const cakecut::Error&) {
      // sliver from two nearly equal angles; its area is negligible
    }
  }
  return cakecut::validate_cake(std::move(pieces));
}

// Octahedron with independent radii along each half-axis: 8 tetrahedra
// sharing the origin.
inline Cake random_octahedron_cake(Rng& rng) {
  double r[3][2];
  for (auto& axis : r) {
    axis[0] = uniform(rng, 0.4, 1.6);
    axis[1] = uniform(rng, 0.4, 1.6);
  }
  std::vector<Simplex> pieces;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Vector> v{Vector::zeros(3)};
    for (int i = 0; i < 3; ++i) {
      const int side = (mask >> i) & 1;
      Vector e = Vector::zeros(3);
      e[i] = side ? -r[i][1] : r[i][0];
      v.push_back(e);
    }
    pieces.emplace_back(std::move(v));
  }
  return cakecut::validate_cake(std::move(pieces));
}

inline Simplex random_simplex(Rng& rng, int dim) {
  for (;;) {
    std::vector<Vector> v;
    for (int i = 0; i <= dim; ++i) {
      Vector p = Vector::zeros(dim);
      for (int k = 0; k < dim; ++k) p[k] = uniform(rng, -2.0, 2.0);
      v.push_back(p);
    }
    try {
      return Simplex(std::move(v));
    } catch (const cakecut::Error&) {
    }
  }
}

// Jittered corner simplex: well shaped, so bounding-box rejection sampling
// accepts roughly 1/n! of the draws.
inline Simplex random_fat_simplex(Rng& rng, int dim) {
  std::vector<Vector> v;
  for (int i = 0; i <= dim; ++i) {
    Vector p = Vector::zeros(dim);
    if (i > 0) p[i - 1] = 1.0;
    for (int k = 0; k < dim; ++k) p[k] += uniform(rng, -0.25, 0.25);
    v.push_back(p);
  }
  return Simplex(std::move(v));
}

// ---------------------------------------------------------------------------
// 2D oracle: clip each triangle against the halfplane and take shoelace areas.

using Point2 = std::array<double, 2>;

inline double shoelace(const Point2* poly, std::size_t count) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % count];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(s);
}

// Area of triangle tri ∩ {<y, (ax, ay)> >= s}.
inline double clipped_triangle_area(const std::array<Point2, 3>& tri, double ax, double ay, double s) {
  std::array<Point2, 4> out;
  std::size_t count = 0;
  for (int i = 0; i < 3; ++i) {
    const Point2& p = tri[i];
    const Point2& q = tri[(i + 1) % 3];
    const double hp = p[0] * ax + p[1] * ay - s;
    const double hq = q[0] * ax + q[1] * ay - s;
    if (hp >= 0) out[count++] = p;
    if ((hp >= 0) != (hq >= 0)) {
      const double t = hp / (hp - hq);
      out[count++] = {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
    }
  }
  return count < 3 ? 0.0 : shoelace(out.data(), count);
}

inline double oracle_tail_2d(const Cake& c, double ax, double ay, double s) {
  double total = 0.0;
  double kept = 0.0;
  for (const Simplex& piece : c.pieces()) {
    std::array<Point2, 3> tri;
    for (int i = 0; i < 3; ++i) tri[i] = {piece.vertex(i)[0], piece.vertex(i)[1]};
    total += shoelace(tri.data(), 3);
    kept += clipped_triangle_area(tri, ax, ay, s);
  }
  return kept / total;
}

// Brute-force depth: minimum tail over `angles` evenly spaced directions.
inline double grid_depth_2d(const Cake& c, double x, double y, int angles = 20000) {
  double best = 1.0;
  for (int k = 0; k < angles; ++k) {
    const double t = 2.0 * std::numbers::pi * k / angles;
    const double ax = std::cos(t);
    const double ay = std::sin(t);
    best = std::min(best, oracle_tail_2d(c, ax, ay, x * ax + y * ay));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Monte Carlo oracle: rejection sampling from the bounding box with an
// independent point-in-simplex test.

class SimplexMembership {
 public:
  explicit SimplexMembership(const Simplex& s) : dim_(s.dim()) {
    Eigen::MatrixXd edges(dim_, dim_);
    for (int k = 0; k < dim_; ++k) {
      origin_.push_back(s.vertex(0)[k]);
      for (int j = 0; j < dim_; ++j) edges(k, j) = s.vertex(j + 1)[k] - s.vertex(0)[k];
    }
    const Eigen::MatrixXd inv = edges.inverse();
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) inverse_.push_back(inv(i, j));
  }

  bool contains(const double* p) const {
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) {
      double w = 0.0;
      const double* row = &inverse_[static_cast<std::size_t>(i * dim_)];
      for (int j = 0; j < dim_; ++j) w += row[j] * (p[j] - origin_[static_cast<std::size_t>(j)]);
      if (w < 0.0) return false;
      sum += w;
    }
    return sum <= 1.0;
  }

 private:
  int dim_;
  std::vector<double> origin_;
  std::vector<double> inverse_;
};

struct MonteCarloTail {
  double fraction = 0.0;
  std::size_t hits = 0;
};

inline MonteCarloTail monte_carlo_simplex_tail(const Simplex& s, const Vector& a, double offset, std::size_t samples,
                                               Rng& rng) {
  const int n = s.dim();
  std::vector<double> lo(static_cast<std::size_t>(n), INFINITY);
  std::vector<double> hi(static_cast<std::size_t>(n), -INFINITY);
  for (const Vector& v : s.vertices()) {
    for (int k = 0; k < n; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  }
  const SimplexMembership member(s);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  std::size_t inside = 0;
  std::size_t above = 0;
  while (inside < samples) {
    for (int k = 0; k < n; ++k) p[k] = lo[k] + u(rng) * (hi[k] - lo[k]);
    if (!member.contains(p.data())) continue;
    ++inside;
    double h = -offset;
    for (int k = 0; k < n; ++k) h += p[k] * a[k];
    if (h >= 0.0) ++above;
  }
  return {static_cast<double>(above) / static_cast<double>(samples), inside};
}

// Same estimate without rejection: barycentric weights are the gaps of sorted
// uniforms (uniform on the simplex), and the height is linear in them.
inline double monte_carlo_simplex_tail_direct(const Simplex& s, const Vector& a, double offset, std::size_t samples,
                                              Rng& rng) {
  const int n = s.dim();
  std::vector<double> heights;
  for (const Vector& v : s.vertices()) {
    double h = -offset;
    for (int k = 0; k < n; ++k) h += v[k] * a[k];
    heights.push_back(h);
  }
  std::vector<double> cuts(static_cast<std::size_t>(n) + 2);
  std::size_t above = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    cuts[0] = 0.0;
    cuts[static_cast<std::size_t>(n) + 1] = 1.0;
    for (int k = 1; k <= n; ++k) cuts[k] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::sort(cuts.begin() + 1, cuts.end() - 1);
    double h = 0.0;
    for (int k = 0; k <= n; ++k) h += (cuts[k + 1] - cuts[k]) * heights[static_cast<std::size_t>(k)];
    if (h >= 0.0) ++above;
  }
  return static_cast<double>(above) / static_cast<double>(samples);
}

// ---------------------------------------------------------------------------
// Rigid motions.

inline Eigen::MatrixXd random_rotation(Rng& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

inline Vector apply(const Eigen::MatrixXd& m, const Vector& x, const Vector& shift) {
  Vector out = Vector::zeros(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    double s = shift.dim() ? shift[i] : 0.0;
    for (int j = 0; j < x.dim(); ++j) s += m(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

inline Cake transform_cake(const Cake& c, const Eigen::MatrixXd& m, const Vector& shift) {
  std::vector<Simplex> pieces;
  for (const Simplex& piece : c.pieces()) {
    std::vector<Vector> v;
    for (const Vector& p : piece.vertices()) v.push_back(apply(m, p, shift));
    pieces.emplace_back(std::move(v));
  }
  return cakecut::validate_cake(std::move(pieces));
}

// Uniform point of a random piece (by the piece's volume) for picking test
// points on the cake.
inline Vector random_point_in(const Cake& c, Rng& rng) {
  std::vector<double> weights;
  for (const Simplex& p : c.pieces()) weights.push_back(p.volume());
  const Simplex& piece = c.pieces()[std::discrete_distribution<std::size_t>(weights.begin(), weights.end())(rng)];
  std::exponential_distribution<double> e;
  std::vector<double> w;
  double total = 0.0;
  for (int i = 0; i <= piece.dim(); ++i) {
    w.push_back(e(rng));
    total += w.back();
  }
  Vector p = Vector::zeros(piece.dim());
  for (int i = 0; i <= piece.dim(); ++i) p += piece.vertex(i) * (w[static_cast<std::size_t>(i)] / total);
  return p;
}

}  // namespace testsupport
