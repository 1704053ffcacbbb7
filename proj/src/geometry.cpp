#include "cakecut/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "cakecut/error.hpp"

namespace cakecut {

// ---------------------------------------------------------------------------
// Vector / UnitDirection

Vector::Vector(std::initializer_list<double> coords) : coords_(coords) {}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

Vector Vector::zeros(int dim) { return Vector(std::vector<double>(static_cast<std::size_t>(dim), 0.0)); }

double Vector::norm() const { return std::sqrt(dot(coords_, coords_)); }

Vector& Vector::operator+=(const Vector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double k) {
  for (double& c : coords_) c *= k;
  return *this;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

UnitDirection UnitDirection::from_angle(double angle) {
  return UnitDirection({std::cos(angle), std::sin(angle)});
}

UnitDirection operator-(const UnitDirection& a) {
  std::vector<double> c(a.coords_.begin(), a.coords_.end());
  for (double& x : c) x = -x;
  return UnitDirection(std::move(c));
}

UnitDirection normalize(const Vector& v) {
  double largest = 0.0;
  for (double c : v.coords()) largest = std::max(largest, std::abs(c));
  if (!(largest > 1e-300) || !std::isfinite(largest)) {
    throw Error(ErrorCode::ZeroDirection, "direction vector is zero or not finite");
  }
  // Pre-scaling by the largest magnitude keeps the norm away from
  // overflow/underflow and makes power-of-two rescalings of v bit-neutral.
  std::vector<double> c(v.coords().begin(), v.coords().end());
  for (double& x : c) x /= largest;
  const double n = std::sqrt(dot(c, c));
  for (double& x : c) x /= n;
  return UnitDirection(std::move(c));
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Eigen::MatrixXd edge_matrix(const std::vector<Vector>& v) {
  const int n = v.front().dim();
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = v[static_cast<std::size_t>(j + 1)][i] - v[0][i];
  }
  return m;
}

}  // namespace

Simplex::Simplex(std::vector<Vector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidArgument, "simplex has no vertices");
  dim_ = vertices_.front().dim();
  if (dim_ < 1) throw Error(ErrorCode::InvalidArgument, "simplex dimension must be >= 1");
  if (vertices_.size() != static_cast<std::size_t>(dim_) + 1) {
    std::ostringstream os;
    os << "a " << dim_ << "-simplex needs " << dim_ + 1 << " vertices, got " << vertices_.size();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  std::vector<double> lo(static_cast<std::size_t>(dim_), INFINITY);
  std::vector<double> hi(static_cast<std::size_t>(dim_), -INFINITY);
  for (const Vector& v : vertices_) {
    if (v.dim() != dim_) throw Error(ErrorCode::MixedDimensions, "simplex vertices have mixed dimensions");
    for (int i = 0; i < dim_; ++i) {
      if (!std::isfinite(v[i])) throw Error(ErrorCode::InvalidArgument, "vertex coordinate is not finite");
      lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], v[i]);
      hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], v[i]);
    }
  }
  double diag2 = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double w = hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
    diag2 += w * w;
  }
  bbox_diag_ = std::sqrt(diag2);

  Eigen::MatrixXd edges = edge_matrix(vertices_);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(edges);
  double det = lu.determinant();
  volume_ = std::abs(det) / factorial(dim_);
  if (!(volume_ > 1e-12 * std::pow(bbox_diag_, dim_))) {
    throw Error(ErrorCode::DegenerateSimplex, "simplex vertices are affinely dependent");
  }
  if (det < 0.0) {
    if (dim_ == 1) {
      std::swap(vertices_[0], vertices_[1]);
    } else {
      std::swap(vertices_[1], vertices_[2]);
    }
    edges = edge_matrix(vertices_);
    lu.compute(edges);
  }
  const Eigen::MatrixXd inv = lu.inverse();
  inverse_edges_.resize(static_cast<std::size_t>(dim_ * dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) inverse_edges_[static_cast<std::size_t>(i * dim_ + j)] = inv(i, j);
  }
}

Vector Simplex::centroid() const {
  Vector c = Vector::zeros(dim_);
  for (const Vector& v : vertices_) c += v;
  return c * (1.0 / (dim_ + 1));
}

std::vector<double> Simplex::barycentric(const Vector& p) const {
  std::vector<double> w(static_cast<std::size_t>(dim_) + 1, 0.0);
  double rest = 1.0;
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) {
      s += inverse_edges_[static_cast<std::size_t>(i * dim_ + j)] * (p[j] - vertices_[0][j]);
    }
    w[static_cast<std::size_t>(i) + 1] = s;
    rest -= s;
  }
  w[0] = rest;
  return w;
}

bool Simplex::contains(const Vector& p, double tol) const {
  for (double w : barycentric(p)) {
    if (w < -tol) return false;
  }
  return true;
}

double simplex_volume(const Simplex& s) { return s.volume(); }

// ---------------------------------------------------------------------------
// Tail fractions

double tail_fraction_from_heights(std::span<const double> heights) {
  // V(i, j): fraction for the sub-simplex spanned by the first i positive and
  // first j negative vertices (plus zeros). Splitting along the edge between
  // positive x_i and negative y_j at its zero crossing gives
  //   V(i, j) = (-y_j V(i-1, j) + x_i V(i, j-1)) / (x_i - y_j),
  // a convex combination, with V(i, 0) = 1 and V(0, j) = 0.
  constexpr std::size_t kInline = 32;
  std::array<double, kInline> pos_buf{};
  std::array<double, kInline> neg_buf{};
  std::array<double, kInline + 1> row_buf{};
  std::vector<double> pos_heap;
  std::vector<double> neg_heap;
  std::vector<double> row_heap;
  double* pos = pos_buf.data();
  double* neg = neg_buf.data();
  double* row = row_buf.data();
  if (heights.size() > kInline) {
    pos_heap.resize(heights.size());
    neg_heap.resize(heights.size());
    row_heap.resize(heights.size() + 1);
    pos = pos_heap.data();
    neg = neg_heap.data();
    row = row_heap.data();
  }
  std::size_t k = 0;
  std::size_t m = 0;
  for (double h : heights) {
    if (h > 0.0) {
      pos[k++] = h;
    } else if (h < 0.0) {
      neg[m++] = h;
    }
  }
  if (m == 0) return k == 0 ? 0.0 : 1.0;
  if (k == 0) return 0.0;
  for (std::size_t j = 0; j <= m; ++j) row[j] = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double x = pos[i];
    double left = 1.0;  // V(i+1, 0)
    for (std::size_t j = 1; j <= m; ++j) {
      const double y = neg[j - 1];
      left = (-y * row[j] + x * left) / (x - y);
      row[j] = left;
    }
  }
  return row[m];
}

double simplex_tail_fraction(std::span<const Vector> vertices, std::span<const double> direction,
                             double offset, double scale) {
  constexpr std::size_t kInline = 32;
  std::array<double, kInline> buf{};
  std::vector<double> heap;
  double* d = buf.data();
  if (vertices.size() > kInline) {
    heap.resize(vertices.size());
    d = heap.data();
  }
  const double snap = 1e-14 * scale;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    double h = dot(vertices[i].coords(), direction) - offset;
    if (std::abs(h) < snap) h = 0.0;
    d[i] = h;
  }
  return tail_fraction_from_heights(std::span<const double>(d, vertices.size()));
}

double simplex_tail_fraction(const Simplex& s, const UnitDirection& a, double offset) {
  if (a.dim() != s.dim()) throw Error(ErrorCode::MixedDimensions, "direction and simplex dimensions differ");
  return simplex_tail_fraction(s.vertices(), a.coords(), offset, s.bbox_diagonal());
}

// ---------------------------------------------------------------------------
// ConvexRegion

double polygon_signed_area(std::span<const Vector> loop) {
  double twice = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& p = loop[i];
    const Vector& q = loop[(i + 1) % n];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * twice;
}

namespace {

Vector cross3(const Vector& a, const Vector& b) {
  return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double region_scale(const std::vector<Vector>& vertices) {
  if (vertices.empty()) return 0.0;
  const int n = vertices.front().dim();
  double diag2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const Vector& v : vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    diag2 += (hi - lo) * (hi - lo);
  }
  return std::sqrt(diag2);
}

void require_region_dim(int dim) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorCode::UnsupportedDimension,
                "convex regions are supported in dimensions 2 and 3 only, got " + std::to_string(dim));
  }
}

ConvexRegion clip_polygon(const ConvexRegion& r, std::span<const double> a, double offset) {
  const double eps = 1e-12 * std::max(region_scale(r.vertices), 1e-300);
  const std::size_t n = r.vertices.size();
  std::vector<double> d(n);
  bool any_outside = false;
  bool any_inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = dot(r.vertices[i].coords(), a) - offset;
    if (std::abs(d[i]) <= eps) d[i] = 0.0;
    any_outside |= d[i] > 0.0;
    any_inside |= d[i] <= 0.0;
  }
  if (!any_outside) return r;
  ConvexRegion out;
  out.dim = 2;
  if (!any_inside) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Vector& p = r.vertices[i];
    const Vector& q = r.vertices[j];
    if (d[i] <= 0.0) out.vertices.push_back(p);
    if ((d[i] < 0.0 && d[j] > 0.0) || (d[i] > 0.0 && d[j] < 0.0)) {
      const double t = d[i] / (d[i] - d[j]);
      out.vertices.push_back(p + (q - p) * t);
    }
  }
  return out;
}

// Orders coplanar points counter-clockwise around `normal`, merging near duplicates.
std::vector<Vector> order_cap(std::vector<Vector> pts, const Vector& normal, double eps) {
  std::vector<Vector> unique;
  for (Vector& p : pts) {
    bool dup = false;
    for (const Vector& u : unique) {
      if ((p - u).norm() <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(std::move(p));
  }
  if (unique.size() < 3) return unique;
  Vector c = Vector::zeros(3);
  for (const Vector& p : unique) c += p;
  c *= 1.0 / static_cast<double>(unique.size());
  // In-plane basis.
  Vector helper = std::abs(normal[0]) < 0.9 ? Vector{1, 0, 0} : Vector{0, 1, 0};
  Vector u = cross3(normal, helper);
  u *= 1.0 / u.norm();
  Vector v = cross3(normal, u);
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const Vector rel = unique[i] - c;
    keyed.emplace_back(std::atan2(dot(rel, v), dot(rel, u)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vector> ordered;
  for (const auto& [angle, i] : keyed) ordered.push_back(unique[i]);
  return ordered;
}

ConvexRegion clip_polyhedron(const ConvexRegion& r, std::span<const double> a, double offset) {
  const double eps = 1e-12 * std::max(region_scale(r.vertices), 1e-300);
  const std::size_t n = r.vertices.size();
  std::vector<double> d(n);
  bool any_outside = false;
  bool any_strictly_inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = dot(r.vertices[i].coords(), a) - offset;
    if (std::abs(d[i]) <= eps) d[i] = 0.0;
    any_outside |= d[i] > 0.0;
    any_strictly_inside |= d[i] < 0.0;
  }
  if (!any_outside) return r;
  ConvexRegion out;
  out.dim = 3;
  if (!any_strictly_inside) {
    // Only a lower-dimensional part touching the plane survives.
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] == 0.0) out.vertices.push_back(r.vertices[i]);
    }
    return out;
  }

  // Points are identified by (kind, index): original vertex i -> (i, i);
  // crossing on edge {i, j} -> (min, max) with i != j.
  std::map<std::pair<int, int>, int> index_of;
  auto point_index = [&](int i, int j) -> int {
    const auto key = std::minmax(i, j);
    auto it = index_of.find(key);
    if (it != index_of.end()) return it->second;
    Vector p;
    if (i == j) {
      p = r.vertices[static_cast<std::size_t>(i)];
    } else {
      const Vector& pi = r.vertices[static_cast<std::size_t>(i)];
      const Vector& pj = r.vertices[static_cast<std::size_t>(j)];
      const double t = d[static_cast<std::size_t>(i)] / (d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)]);
      p = pi + (pj - pi) * t;
    }
    const int idx = static_cast<int>(out.vertices.size());
    out.vertices.push_back(std::move(p));
    index_of.emplace(key, idx);
    return idx;
  };

  std::vector<int> on_plane;
  for (const std::vector<int>& facet : r.facets) {
    std::vector<int> loop;
    const std::size_t m = facet.size();
    for (std::size_t k = 0; k < m; ++k) {
      const int i = facet[k];
      const int j = facet[(k + 1) % m];
      const double di = d[static_cast<std::size_t>(i)];
      const double dj = d[static_cast<std::size_t>(j)];
      if (di <= 0.0) {
        const int idx = point_index(i, i);
        loop.push_back(idx);
        if (di == 0.0) on_plane.push_back(idx);
      }
      if ((di < 0.0 && dj > 0.0) || (di > 0.0 && dj < 0.0)) {
        const int idx = point_index(i, j);
        loop.push_back(idx);
        on_plane.push_back(idx);
      }
    }
    if (loop.size() >= 3) {
      // A facet lying in the plane with everything else outside cannot occur
      // here because some vertex is strictly inside.
      out.facets.push_back(std::move(loop));
    }
  }

  std::sort(on_plane.begin(), on_plane.end());
  on_plane.erase(std::unique(on_plane.begin(), on_plane.end()), on_plane.end());
  if (on_plane.size() >= 3) {
    std::vector<Vector> pts;
    for (int idx : on_plane) pts.push_back(out.vertices[static_cast<std::size_t>(idx)]);
    const Vector normal(std::vector<double>(a.begin(), a.end()));
    const std::vector<Vector> ordered = order_cap(pts, normal, eps);
    if (ordered.size() >= 3) {
      std::vector<int> cap;
      for (const Vector& p : ordered) {
        for (int idx : on_plane) {
          if ((out.vertices[static_cast<std::size_t>(idx)] - p).norm() <= eps) {
            cap.push_back(idx);
            break;
          }
        }
      }
      out.facets.push_back(std::move(cap));
    }
  }

  // Compact: drop vertices not referenced by any facet (original vertices
  // that were inside are always referenced).
  std::vector<int> remap(out.vertices.size(), -1);
  std::vector<Vector> kept;
  for (std::vector<int>& facet : out.facets) {
    for (int& idx : facet) {
      if (remap[static_cast<std::size_t>(idx)] < 0) {
        remap[static_cast<std::size_t>(idx)] = static_cast<int>(kept.size());
        kept.push_back(out.vertices[static_cast<std::size_t>(idx)]);
      }
      idx = remap[static_cast<std::size_t>(idx)];
    }
  }
  out.vertices = std::move(kept);
  return out;
}

}  // namespace

double ConvexRegion::measure() const {
  if (vertices.size() < static_cast<std::size_t>(dim) + 1) return 0.0;
  if (dim == 2) return std::abs(polygon_signed_area(vertices));
  if (facets.empty()) return 0.0;
  const Vector ref = vertex_centroid();
  double six_vol = 0.0;
  for (const std::vector<int>& f : facets) {
    const Vector& p0 = vertices[static_cast<std::size_t>(f[0])];
    for (std::size_t k = 1; k + 1 < f.size(); ++k) {
      const Vector& p1 = vertices[static_cast<std::size_t>(f[k])];
      const Vector& p2 = vertices[static_cast<std::size_t>(f[k + 1])];
      six_vol += dot(cross3(p1 - p0, p2 - p0), p0 - ref);
    }
  }
  return std::abs(six_vol) / 6.0;
}

Vector ConvexRegion::vertex_centroid() const {
  Vector c = Vector::zeros(dim);
  if (vertices.empty()) return c;
  for (const Vector& v : vertices) c += v;
  return c * (1.0 / static_cast<double>(vertices.size()));
}

ConvexRegion ConvexRegion::box(const Vector& lo, const Vector& hi) {
  require_region_dim(lo.dim());
  ConvexRegion r;
  r.dim = lo.dim();
  if (r.dim == 2) {
    r.vertices = {Vector{lo[0], lo[1]}, Vector{hi[0], lo[1]}, Vector{hi[0], hi[1]}, Vector{lo[0], hi[1]}};
    return r;
  }
  for (int k = 0; k < 8; ++k) {
    r.vertices.push_back(Vector{(k & 1) ? hi[0] : lo[0], (k & 2) ? hi[1] : lo[1], (k & 4) ? hi[2] : lo[2]});
  }
  // Outward-oriented (counter-clockwise seen from outside).
  r.facets = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  return r;
}

ConvexRegion ConvexRegion::from_simplex(const Simplex& s) {
  require_region_dim(s.dim());
  ConvexRegion r;
  r.dim = s.dim();
  r.vertices = s.vertices();
  if (r.dim == 3) {
    // Positive orientation: (v1-v0, v2-v0, v3-v0) is right-handed, so the
    // face opposite v3 seen from outside is v0, v2, v1.
    r.facets = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
  }
  return r;
}

ConvexRegion clip_convex(const ConvexRegion& r, const UnitDirection& a, double offset) {
  require_region_dim(r.dim);
  if (a.dim() != r.dim) throw Error(ErrorCode::MixedDimensions, "direction and region dimensions differ");
  if (r.empty()) return r;
  return r.dim == 2 ? clip_polygon(r, a.coords(), offset) : clip_polyhedron(r, a.coords(), offset);
}

// ---------------------------------------------------------------------------
// Polygon triangulation

namespace {

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

int orientation_sign(const Vector& o, const Vector& a, const Vector& b, double eps) {
  const double c = cross2(o, a, b);
  return c > eps ? 1 : (c < -eps ? -1 : 0);
}

bool on_segment(const Vector& p, const Vector& q, const Vector& r) {
  return std::min(p[0], q[0]) <= r[0] && r[0] <= std::max(p[0], q[0]) && std::min(p[1], q[1]) <= r[1] &&
         r[1] <= std::max(p[1], q[1]);
}

bool segments_intersect(const Vector& p1, const Vector& p2, const Vector& q1, const Vector& q2, double eps) {
  const int o1 = orientation_sign(p1, p2, q1, eps);
  const int o2 = orientation_sign(p1, p2, q2, eps);
  const int o3 = orientation_sign(q1, q2, p1, eps);
  const int o4 = orientation_sign(q1, q2, p2, eps);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

bool point_in_triangle(const Vector& p, const Vector& a, const Vector& b, const Vector& c, double eps) {
  return cross2(a, b, p) >= -eps && cross2(b, c, p) >= -eps && cross2(c, a, p) >= -eps;
}

}  // namespace

std::vector<Simplex> triangulate_polygon(std::span<const Vector> loop) {
  if (loop.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon needs at least 3 vertices");
  for (const Vector& v : loop) {
    if (v.dim() != 2) throw Error(ErrorCode::MixedDimensions, "polygon vertices must be 2D");
    if (!std::isfinite(v[0]) || !std::isfinite(v[1])) {
      throw Error(ErrorCode::InvalidArgument, "polygon vertex is not finite");
    }
  }
  const double scale = region_scale(std::vector<Vector>(loop.begin(), loop.end()));
  const double area = polygon_signed_area(loop);
  if (!(std::abs(area) > 1e-12 * scale * scale)) {
    throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");
  }

  const std::size_t n = loop.size();
  const double eps = 1e-12 * scale * scale;
  for (std::size_t i = 0; i < n; ++i) {
    if ((loop[i] - loop[(i + 1) % n]).norm() <= 1e-12 * scale) {
      throw Error(ErrorCode::DegeneratePolygon, "polygon has repeated consecutive vertices");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(loop[i], loop[(i + 1) % n], loop[j], loop[(j + 1) % n], eps)) {
        std::ostringstream os;
        os << "edges " << i << " and " << j << " intersect";
        throw Error(ErrorCode::SelfIntersecting, os.str());
      }
    }
  }
  if (area < 0.0) throw Error(ErrorCode::WrongOrientation, "polygon must be counter-clockwise");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Simplex> out;
  while (idx.size() > 3) {
    const std::size_t m = idx.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const Vector& a = loop[idx[(k + m - 1) % m]];
      const Vector& b = loop[idx[k]];
      const Vector& c = loop[idx[(k + 1) % m]];
      const double turn = cross2(a, b, c);
      if (std::abs(turn) <= eps) {
        // Collinear vertex: drop it, it carries no area.
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
        clipped = true;
        break;
      }
      if (turn < 0.0) continue;
      bool ear = true;
      for (std::size_t t = 0; t < m && ear; ++t) {
        if (t == k || t == (k + m - 1) % m || t == (k + 1) % m) continue;
        const Vector& p = loop[idx[t]];
        if (p == a || p == c) continue;
        if (point_in_triangle(p, a, b, c, eps)) ear = false;
      }
      if (!ear) continue;
      out.emplace_back(std::vector<Vector>{a, b, c});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw Error(ErrorCode::SelfIntersecting, "no ear found; polygon is not simple");
  }
  const Vector& a = loop[idx[0]];
  const Vector& b = loop[idx[1]];
  const Vector& c = loop[idx[2]];
  if (std::abs(cross2(a, b, c)) > eps) out.emplace_back(std::vector<Vector>{a, b, c});
  return out;
}

}  // namespace cakecut
