#include "cakecut/cake.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cakecut/error.hpp"

namespace cakecut {

const char* overlap_method_name(OverlapMethod m) {
  switch (m) {
    case OverlapMethod::Exact1D: return "exact_1d";
    case OverlapMethod::ExactClip2D: return "exact_clip_2d";
    case OverlapMethod::SeparatingFacet: return "separating_facet";
    case OverlapMethod::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

namespace {

Vector uniform_in_simplex(const Simplex& s, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  const int n = s.dim();
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  double total = 0.0;
  for (double& x : w) {
    x = expo(rng);
    total += x;
  }
  Vector p = Vector::zeros(n);
  for (int i = 0; i <= n; ++i) p += s.vertex(i) * (w[static_cast<std::size_t>(i)] / total);
  return p;
}

// b lies in the closed outer side of some facet of a.
bool facet_separates(const Simplex& a, const Simplex& b) {
  const int n = a.dim();
  std::vector<std::vector<double>> bary;
  bary.reserve(b.vertices().size());
  for (const Vector& v : b.vertices()) bary.push_back(a.barycentric(v));
  for (int k = 0; k <= n; ++k) {
    bool all_out = true;
    for (const auto& w : bary) {
      if (w[static_cast<std::size_t>(k)] > 1e-9) {
        all_out = false;
        break;
      }
    }
    if (all_out) return true;
  }
  return false;
}

bool bboxes_disjoint(const Simplex& a, const Simplex& b) {
  for (int i = 0; i < a.dim(); ++i) {
    double alo = INFINITY, ahi = -INFINITY, blo = INFINITY, bhi = -INFINITY;
    for (const Vector& v : a.vertices()) {
      alo = std::min(alo, v[i]);
      ahi = std::max(ahi, v[i]);
    }
    for (const Vector& v : b.vertices()) {
      blo = std::min(blo, v[i]);
      bhi = std::max(bhi, v[i]);
    }
    const double slack = 1e-12 * std::max(a.bbox_diagonal(), b.bbox_diagonal());
    if (ahi <= blo + slack || bhi <= alo + slack) return true;
  }
  return false;
}

double clipped_triangle_area(const Simplex& a, const Simplex& b) {
  ConvexRegion r = ConvexRegion::from_simplex(a);
  // b is counter-clockwise after canonicalization; keep the left side of each edge.
  for (int k = 0; k < 3 && !r.empty(); ++k) {
    const Vector& p = b.vertex(k);
    const Vector& q = b.vertex((k + 1) % 3);
    const Vector outward{q[1] - p[1], p[0] - q[0]};
    const UnitDirection n = normalize(outward);
    r = clip_convex(r, n, dot(n, p));
  }
  return r.measure();
}

}  // namespace

OverlapEstimate estimate_overlap(const Simplex& a, const Simplex& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::MixedDimensions, "pieces have different dimensions");
  OverlapEstimate est;
  const int n = a.dim();
  if (n == 1) {
    est.method = OverlapMethod::Exact1D;
    const double alo = std::min(a.vertex(0)[0], a.vertex(1)[0]);
    const double ahi = std::max(a.vertex(0)[0], a.vertex(1)[0]);
    const double blo = std::min(b.vertex(0)[0], b.vertex(1)[0]);
    const double bhi = std::max(b.vertex(0)[0], b.vertex(1)[0]);
    est.fraction = std::max(0.0, std::min(ahi, bhi) - std::max(alo, blo)) / a.volume();
    return est;
  }
  if (n == 2) {
    est.method = OverlapMethod::ExactClip2D;
    if (!bboxes_disjoint(a, b)) est.fraction = clipped_triangle_area(a, b) / a.volume();
    return est;
  }
  if (bboxes_disjoint(a, b) || facet_separates(a, b) || facet_separates(b, a)) {
    est.method = OverlapMethod::SeparatingFacet;
    return est;
  }
  est.method = OverlapMethod::MonteCarlo;
  est.samples = kOverlapSamples;
  std::mt19937_64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < kOverlapSamples; ++s) {
    const Vector p = uniform_in_simplex(a, rng);
    const std::vector<double> w = b.barycentric(p);
    if (std::all_of(w.begin(), w.end(), [](double x) { return x > 1e-9; })) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(kOverlapSamples);
  est.fraction = p;
  est.three_sigma = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(kOverlapSamples));
  return est;
}

Cake validate_cake(std::vector<Simplex> pieces) {
  if (pieces.empty()) throw Error(ErrorCode::EmptyCake, "cake has no pieces");
  const int n = pieces.front().dim();
  for (const Simplex& s : pieces) {
    if (s.dim() != n) throw Error(ErrorCode::MixedDimensions, "cake pieces have mixed dimensions");
  }

  Cake c;
  c.dim_ = n;
  c.lo_ = Vector(std::vector<double>(static_cast<std::size_t>(n), INFINITY));
  c.hi_ = Vector(std::vector<double>(static_cast<std::size_t>(n), -INFINITY));
  for (const Simplex& s : pieces) {
    c.measure_ += s.volume();
    for (const Vector& v : s.vertices()) {
      for (int i = 0; i < n; ++i) {
        c.lo_[i] = std::min(c.lo_[i], v[i]);
        c.hi_[i] = std::max(c.hi_[i], v[i]);
      }
      c.vertices_.push_back(v);
    }
  }
  std::sort(c.vertices_.begin(), c.vertices_.end(), [](const Vector& x, const Vector& y) {
    return std::lexicographical_compare(x.coords().begin(), x.coords().end(), y.coords().begin(),
                                        y.coords().end());
  });
  c.vertices_.erase(std::unique(c.vertices_.begin(), c.vertices_.end()), c.vertices_.end());

  ValidationCertificate& cert = c.certificate_;
  cert.method = n == 1 ? OverlapMethod::Exact1D : (n == 2 ? OverlapMethod::ExactClip2D : OverlapMethod::SeparatingFacet);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const OverlapEstimate est = estimate_overlap(pieces[i], pieces[j], (i << 32) ^ j);
      bool overlapping = false;
      double reported = est.fraction;
      if (est.method == OverlapMethod::MonteCarlo) {
        cert.method = OverlapMethod::MonteCarlo;
        cert.samples_per_pair = est.samples;
        ++cert.sampled_pairs;
        overlapping = est.fraction > est.three_sigma;
      } else {
        // Exact: intersection measure against 1e-10 of the total.
        reported = est.fraction * pieces[i].volume() / c.measure_;
        overlapping = reported > 1e-10;
      }
      cert.max_overlap = std::max(cert.max_overlap, reported);
      if (overlapping) throw OverlappingPiecesError(i, j, reported);
    }
  }
  c.pieces_ = std::move(pieces);
  return c;
}

double measure(const Cake& c) { return c.measure(); }

double Cake::tail(std::span<const double> direction, double offset) const {
  const double scale = bbox_diagonal();
  double inside = 0.0;
  for (const Simplex& s : pieces_) {
    inside += s.volume() * simplex_tail_fraction(s.vertices(), direction, offset, scale);
  }
  return std::clamp(inside / measure_, 0.0, 1.0);
}

Vector Cake::centroid() const {
  Vector c = Vector::zeros(dim_);
  for (const Simplex& s : pieces_) c += s.centroid() * (s.volume() / measure_);
  return c;
}

bool Cake::contains(const Vector& p, double tol) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Simplex& s) { return s.contains(p, tol); });
}

Cake Cake::translated(const Vector& v) const {
  Cake c = *this;
  c.pieces_.clear();
  for (const Simplex& s : pieces_) {
    std::vector<Vector> moved;
    for (const Vector& p : s.vertices()) moved.push_back(p + v);
    c.pieces_.emplace_back(std::move(moved));
  }
  c.lo_ += v;
  c.hi_ += v;
  for (Vector& p : c.vertices_) p += v;
  return c;
}

double tail(const Cake& c, const TailQuery& q) {
  if (q.direction.dim() != c.dim()) throw Error(ErrorCode::MixedDimensions, "direction and cake dimensions differ");
  return c.tail(q.direction.coords(), q.offset);
}

double quantile(const Cake& c, const UnitDirection& a, double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::InvalidArgument, "quantile level must lie in (0, 1)");
  if (a.dim() != c.dim()) throw Error(ErrorCode::MixedDimensions, "direction and cake dimensions differ");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Vector& v : c.vertices()) {
    const double h = dot(a, v);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  // Invariant: tail(lo) >= t > tail(hi) up to the stopping tolerances.
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-12 || mid <= lo || mid >= hi) break;
    const double f = c.tail(a.coords(), mid);
    if (std::abs(f - t) <= 1e-10) break;
    if (f >= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

std::vector<Vector> sample_points(const Cake& c, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> weights;
  for (const Simplex& s : c.pieces()) weights.push_back(s.volume());
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(uniform_in_simplex(c.pieces()[pick(rng)], rng));
  return out;
}

}  // namespace cakecut
