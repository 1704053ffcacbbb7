#pragma once

// Dimension-generic kernel: points, directions, simplices, exact
// simplex/halfspace volume fractions, and convex clipping in 2D/3D.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cakecut/error.hpp"

namespace cakecut {

class Vector {
 public:
  Vector() = default;
  Vector(std::initializer_list<double> coords);
  explicit Vector(std::vector<double> coords);

  static Vector zeros(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const { return coords_; }

  double norm() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double k);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, double k) { return a *= k; }
  friend Vector operator*(double k, Vector a) { return a *= k; }
  friend Vector operator-(Vector a) { return a *= -1.0; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

double dot(std::span<const double> a, std::span<const double> b);
inline double dot(const Vector& a, const Vector& b) { return dot(a.coords(), b.coords()); }

// A direction a on the unit sphere; the halfspace x + l_a is {y : <y, a> >= <x, a>}.
class UnitDirection {
 public:
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const { return coords_; }
  Vector as_vector() const { return Vector(coords_); }

  // (cos angle, sin angle).
  static UnitDirection from_angle(double angle);

  friend UnitDirection operator-(const UnitDirection& a);
  friend bool operator==(const UnitDirection&, const UnitDirection&) = default;

 private:
  friend UnitDirection normalize(const Vector& v);
  explicit UnitDirection(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::vector<double> coords_;
};

// Throws Error(ZeroDirection) when every |coord| <= 1e-300.
UnitDirection normalize(const Vector& v);

inline double dot(const UnitDirection& a, const Vector& x) { return dot(a.coords(), x.coords()); }

// n+1 affinely independent vertices in R^n. Construction swaps the first two
// vertices if needed so the stored order has positive signed volume.
class Simplex {
 public:
  // Throws DegenerateSimplex (volume <= 1e-12 * bbox_diag^n) or
  // MixedDimensions or InvalidArgument (wrong vertex count, non-finite coordinates).
  explicit Simplex(std::vector<Vector> vertices);

  int dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const Vector& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  double volume() const { return volume_; }
  double bbox_diagonal() const { return bbox_diag_; }
  Vector centroid() const;

  // Barycentric weights of p (sum to 1; all >= 0 iff p lies in the simplex).
  std::vector<double> barycentric(const Vector& p) const;
  bool contains(const Vector& p, double tol = 1e-9) const;

 private:
  int dim_ = 0;
  std::vector<Vector> vertices_;
  double volume_ = 0.0;
  double bbox_diag_ = 0.0;
  // Row-major inverse of the edge matrix [v1-v0 | ... | vn-v0].
  std::vector<double> inverse_edges_;
};

double simplex_volume(const Simplex& s);

// Fraction of a simplex lying on the nonnegative side of a linear function
// whose values at the n+1 vertices are `heights`. Exact (convex-combination
// recurrence over positive/negative heights); heights equal to zero are
// treated as measure-zero and do not contribute.
double tail_fraction_from_heights(std::span<const double> heights);

// Exact fraction of s inside the closed halfspace {y : <y, a> >= offset}.
// Heights with |d| < 1e-14 * bbox_diag count as zero (on the hyperplane).
double simplex_tail_fraction(const Simplex& s, const UnitDirection& a, double offset);

// Same, with the direction given as raw coordinates (need not be unit length
// for the fraction to be correct; `scale` is the perturbation length unit).
double simplex_tail_fraction(std::span<const Vector> vertices, std::span<const double> direction,
                             double offset, double scale);

// Convex polygon (dim 2, vertices counter-clockwise) or convex polyhedron
// (dim 3, facets are outward-oriented vertex-index loops). Empty when
// `vertices` is empty. A region collapsed to lower dimension keeps its
// vertices but has zero measure.
struct ConvexRegion {
  int dim = 2;
  std::vector<Vector> vertices;
  std::vector<std::vector<int>> facets;

  bool empty() const { return vertices.empty(); }
  double measure() const;
  Vector vertex_centroid() const;

  static ConvexRegion box(const Vector& lo, const Vector& hi);
  // Throws UnsupportedDimension unless dim is 2 or 3.
  static ConvexRegion from_simplex(const Simplex& s);
};

// Intersection of r with {y : <y, a> <= offset}. Throws UnsupportedDimension
// for dim outside {2, 3}.
ConvexRegion clip_convex(const ConvexRegion& r, const UnitDirection& a, double offset);

double polygon_signed_area(std::span<const Vector> loop);

// Ear-clipping triangulation of a simple counter-clockwise polygon.
// Throws DegeneratePolygon, WrongOrientation or SelfIntersecting.
std::vector<Simplex> triangulate_polygon(std::span<const Vector> loop);

}  // namespace cakecut
