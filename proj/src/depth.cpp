#include "cakecut/depth.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace cakecut {

const char* depth_method_name(DepthMethod m) {
  switch (m) {
    case DepthMethod::Exact1D: return "exact_1d";
    case DepthMethod::ExactSweep2D: return "exact_sweep_2d";
    case DepthMethod::SampledSphere: return "sampled_sphere";
  }
  return "unknown";
}

Cut make_cut(const Cake& c, const Vector& anchor, const UnitDirection& direction) {
  return Cut{anchor, direction, c.tail(direction.coords(), dot(direction, anchor))};
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Values closer than this are ties; the earlier angle or lattice index wins.
constexpr double kTieTolerance = 1e-12;

void require_same_dim(const Cake& c, const Vector& x) {
  if (x.dim() != c.dim()) throw Error(ErrorCode::MixedDimensions, "point and cake dimensions differ");
  for (double v : x.coords()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "point coordinate is not finite");
  }
}

double halton(std::size_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::vector<UnitDirection> build_lattice(int dim, std::size_t count) {
  std::vector<UnitDirection> out;
  out.reserve(count);
  if (dim == 1) {
    out.push_back(normalize(Vector{1.0}));
    out.push_back(normalize(Vector{-1.0}));
    return out;
  }
  if (dim == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back(UnitDirection::from_angle(kTwoPi * static_cast<double>(k) / static_cast<double>(count)));
    }
    return out;
  }
  if (dim == 3) {
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < count; ++k) {
      const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * static_cast<double>(k);
      out.push_back(normalize(Vector{r * std::cos(phi), r * std::sin(phi), z}));
    }
    return out;
  }
  static constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (dim > static_cast<int>(std::size(kPrimes))) {
    throw Error(ErrorCode::UnsupportedDimension, "sphere lattice supports dimensions up to 16");
  }
  for (std::size_t k = 0; k < count; ++k) {
    Vector g = Vector::zeros(dim);
    for (int i = 0; i < dim; ++i) {
      const double u = halton(k + 1, kPrimes[i]);
      g[i] = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
    }
    out.push_back(normalize(g));
  }
  return out;
}

const std::vector<UnitDirection>& cached_lattice(int dim, std::size_t count) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::size_t>, std::vector<UnitDirection>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({dim, count});
  if (it == cache.end()) it = cache.emplace(std::make_pair(dim, count), build_lattice(dim, count)).first;
  return it->second;
}

double tail_through(const Cake& c, const Vector& x, std::span<const double> a) {
  return c.tail(a, dot(a, x.coords()));
}

DepthCertificate depth_1d(const Cake& c, const Vector& x) {
  const UnitDirection right = normalize(Vector{1.0});
  const UnitDirection left = -right;
  const Cut r = make_cut(c, x, right);
  const Cut l = make_cut(c, x, left);
  const Cut& w = l.fraction < r.fraction ? l : r;
  return DepthCertificate{x, w.fraction, w.fraction, w, DepthMethod::Exact1D};
}

DepthCertificate depth_sweep_2d(const Cake& c, const Vector& x) {
  auto f = [&](double theta) {
    const double a[2] = {std::cos(theta), std::sin(theta)};
    return tail_through(c, x, a);
  };
  auto wrap = [](double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    return theta >= kTwoPi ? 0.0 : theta;
  };

  const double scale = c.bbox_diagonal();
  std::vector<double> critical{0.0};
  for (const Vector& v : c.vertices()) {
    const double dx = v[0] - x[0];
    const double dy = v[1] - x[1];
    if (std::hypot(dx, dy) <= 1e-12 * scale) continue;
    const double phi = std::atan2(dy, dx);
    critical.push_back(wrap(phi + 0.5 * std::numbers::pi));
    critical.push_back(wrap(phi - 0.5 * std::numbers::pi));
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end(),
                             [](double p, double q) { return q - p <= 1e-15; }),
                 critical.end());

  double best_value = INFINITY;
  double best_angle = 0.0;
  auto consider = [&](double theta, double value) {
    theta = wrap(theta);
    if (value < best_value - kTieTolerance) {
      best_value = value;
      best_angle = theta;
    } else if (value <= best_value + kTieTolerance && theta < best_angle) {
      best_value = std::min(best_value, value);
      best_angle = theta;
    }
  };

  std::vector<double> critical_values(critical.size());
  for (std::size_t k = 0; k < critical.size(); ++k) {
    critical_values[k] = f(critical[k]);
    consider(critical[k], critical_values[k]);
  }

  constexpr int kSubdivisions = 8;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t k = 0; k < critical.size(); ++k) {
    const double lo = critical[k];
    const double hi = k + 1 < critical.size() ? critical[k + 1] : critical[0] + kTwoPi;
    const double fhi = k + 1 < critical.size() ? critical_values[k + 1] : critical_values[0];
    if (hi - lo <= 1e-10) continue;
    double samples[kSubdivisions + 1];
    double values[kSubdivisions + 1];
    for (int s = 0; s <= kSubdivisions; ++s) {
      samples[s] = lo + (hi - lo) * s / kSubdivisions;
      values[s] = s == 0 ? critical_values[k] : (s == kSubdivisions ? fhi : f(samples[s]));
    }
    int arg = 0;
    for (int s = 1; s <= kSubdivisions; ++s) {
      if (values[s] < values[arg]) arg = s;
    }
    double a = samples[std::max(arg - 1, 0)];
    double b = samples[std::min(arg + 1, kSubdivisions)];
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > 1e-10) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = f(x2);
      }
    }
    for (int s = 1; s < kSubdivisions; ++s) consider(samples[s], values[s]);
    consider(x1, f1);
    consider(x2, f2);
  }

  const UnitDirection dir = UnitDirection::from_angle(best_angle);
  Cut witness = make_cut(c, x, dir);
  const double upper = witness.fraction;
  return DepthCertificate{x, std::max(0.0, upper - kSweepTolerance), upper, std::move(witness),
                          DepthMethod::ExactSweep2D};
}

DepthCertificate depth_sampled(const Cake& c, const Vector& x) {
  const auto& lattice = cached_lattice(c.dim(), kSphereLatticeSize);
  Cut witness = minimize_tail_on_sphere(c, x, lattice, 16, 1e-8);
  const double upper = witness.fraction;
  return DepthCertificate{x, 0.0, upper, std::move(witness), DepthMethod::SampledSphere};
}

// Orthonormal basis of the tangent space at unit vector a.
std::vector<Vector> tangent_basis(const Vector& a) {
  const int n = a.dim();
  std::vector<Vector> basis;
  std::vector<Vector> span{a};
  for (int axis = 0; axis < n && static_cast<int>(basis.size()) < n - 1; ++axis) {
    Vector e = Vector::zeros(n);
    e[axis] = 1.0;
    for (const Vector& b : span) e -= b * dot(e, b);
    const double len = e.norm();
    if (len < 1e-6) continue;
    e *= 1.0 / len;
    span.push_back(e);
    basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace

std::vector<UnitDirection> sphere_lattice(int dim, std::size_t count) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "lattice size must be >= 1");
  return cached_lattice(dim, count);
}

Cut minimize_tail_on_sphere(const Cake& c, const Vector& x, std::span<const UnitDirection> starts,
                            std::size_t refine, double step_tol) {
  require_same_dim(c, x);
  if (starts.empty()) throw Error(ErrorCode::InvalidArgument, "no starting directions");
  const int n = c.dim();
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    scored.emplace_back(tail_through(c, x, starts[i].coords()), i);
  }
  const std::size_t keep = std::min(refine, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end());

  UnitDirection best_dir = starts[scored.front().second];
  double best = scored.front().first;
  if (n == 1) return Cut{x, best_dir, best};

  const double h0 = 3.5 / std::pow(static_cast<double>(starts.size()), 1.0 / (n - 1));
  for (std::size_t s = 0; s < keep; ++s) {
    Vector a = starts[scored[s].second].as_vector();
    double fa = scored[s].first;
    double h = h0;
    std::vector<Vector> basis = tangent_basis(a);
    int moves = 0;
    while (h > step_tol && moves < 10000) {
      bool improved = false;
      for (const Vector& t : basis) {
        for (double sign : {1.0, -1.0}) {
          const UnitDirection b = normalize(a + t * (sign * h));
          const double fb = tail_through(c, x, b.coords());
          if (fb < fa - 1e-15) {
            a = b.as_vector();
            fa = fb;
            improved = true;
            break;
          }
        }
        if (improved) break;
      }
      if (improved) {
        basis = tangent_basis(a);
        ++moves;
      } else {
        h *= 0.5;
      }
    }
    if (fa < best - kTieTolerance) {
      best = fa;
      best_dir = normalize(a);
    }
  }
  return make_cut(c, x, best_dir);
}

DepthCertificate depth_at(const Cake& c, const Vector& x) {
  require_same_dim(c, x);
  if (c.dim() == 1) return depth_1d(c, x);
  if (c.dim() == 2) return depth_sweep_2d(c, x);
  return depth_sampled(c, x);
}

Cut best_cut(const Cake& c, const Vector& x, CutMode mode) {
  DepthCertificate cert = depth_at(c, x);
  if (mode == CutMode::MinPiece) return std::move(cert.witness);
  return make_cut(c, x, -cert.witness.direction);
}

namespace {

ConvexRegion inflated_box(const Cake& c) {
  Vector lo = c.bbox_lo();
  Vector hi = c.bbox_hi();
  for (int i = 0; i < c.dim(); ++i) {
    const double pad = 0.1 * (hi[i] - lo[i]);
    lo[i] -= pad;
    hi[i] += pad;
  }
  return ConvexRegion::box(lo, hi);
}

void require_region_dim(const Cake& c) {
  if (c.dim() != 2 && c.dim() != 3) {
    throw Error(ErrorCode::UnsupportedDimension,
                "level sets are supported in dimensions 2 and 3 only, got " + std::to_string(c.dim()));
  }
}

}  // namespace

ConvexRegion level_set(const Cake& c, double t, std::span<const UnitDirection> directions) {
  require_region_dim(c);
  if (directions.empty()) throw Error(ErrorCode::InvalidArgument, "level set needs at least one direction");
  ConvexRegion r = inflated_box(c);
  for (const UnitDirection& a : directions) {
    r = clip_convex(r, a, quantile(c, a, t));
    if (r.empty()) break;
  }
  return r;
}

NoConvergenceError::NoConvergenceError(MaximinResult best)
    : Error(ErrorCode::NoConvergence,
            [&] {
              std::ostringstream os;
              os << "maximin bracket [" << best.lower << ", " << best.upper << "] still wider than tolerance after "
                 << best.rounds << " rounds";
              return os.str();
            }()),
      best_(std::move(best)) {}

namespace {

MaximinResult maximin_1d(const Cake& c) {
  const Vector median{quantile(c, normalize(Vector{1.0}), 0.5)};
  const DepthCertificate cert = depth_at(c, median);
  MaximinResult r;
  r.point = median;
  r.lower = cert.lower;
  r.upper = 0.5;
  r.rounds = 0;
  r.inside_cake = c.contains(median);
  return r;
}

}  // namespace

MaximinResult maximin_point(const Cake& c, double tol) {
  if (!(tol >= 1e-4)) throw Error(ErrorCode::InvalidArgument, "maximin tolerance must be >= 1e-4");
  if (c.dim() == 1) return maximin_1d(c);
  require_region_dim(c);
  const bool planar = c.dim() == 2;

  MaximinResult best;
  best.directions = sphere_lattice(c.dim(), planar ? 32 : 128);
  best.point = c.centroid();
  best.lower = -INFINITY;
  // Halfspace depth of a continuous measure never exceeds 1/2.
  best.upper = 0.5;

  const double t_floor = 1e-9;
  const double t_step = std::min(tol / 8.0, 1e-4);
  // Aim well inside the tolerance so the returned point also sits close to
  // the optimum; accept the tolerance itself once the extra rounds run out.
  const double target = tol / 4.0;
  constexpr int kExtraRounds = 40;
  int converged_at = 0;
  for (int round = 1; round <= kMaximinMaxRounds; ++round) {
    best.rounds = round;
    // Bracket: level_set(lo) nonempty, level_set(hi) empty or hi == 1/2.
    double lo = std::max(best.lower - 1e-9, t_floor);
    ConvexRegion region = level_set(c, lo, best.directions);
    while (region.empty() && lo > t_floor) {
      lo = std::max(t_floor, lo - tol);
      region = level_set(c, lo, best.directions);
    }
    double hi = best.upper;
    if (hi > lo) {
      ConvexRegion at_hi = level_set(c, hi, best.directions);
      if (!at_hi.empty()) {
        lo = hi;
        region = std::move(at_hi);
      }
    }
    while (hi - lo > t_step) {
      const double mid = 0.5 * (lo + hi);
      ConvexRegion r = level_set(c, mid, best.directions);
      if (r.empty()) {
        hi = mid;
      } else {
        lo = mid;
        region = std::move(r);
      }
    }
    if (hi < best.upper) best.upper = hi + 1e-9;
    if (region.empty()) break;

    const Vector candidate = region.vertex_centroid();
    DepthCertificate cert = depth_at(c, candidate);
    const double value = planar ? cert.lower : cert.upper;
    if (value > best.lower) {
      best.lower = value;
      best.point = candidate;
    }
    best.directions.push_back(cert.witness.direction);
    const double gap = best.upper - best.lower;
    if (gap <= tol && converged_at == 0) converged_at = round;
    if (gap <= target || (converged_at > 0 && (round - converged_at >= kExtraRounds || round == kMaximinMaxRounds))) {
      best.upper = std::max(best.upper, best.lower);
      best.inside_cake = c.contains(best.point);
      return best;
    }
  }
  best.lower = std::max(best.lower, 0.0);
  best.inside_cake = c.contains(best.point);
  throw NoConvergenceError(std::move(best));
}

HellyReport helly_at_level(const Cake& c, std::span<const UnitDirection> directions, double level) {
  require_region_dim(c);
  if (directions.size() != static_cast<std::size_t>(c.dim()) + 1) {
    throw Error(ErrorCode::WrongDirectionCount,
                "expected " + std::to_string(c.dim() + 1) + " directions, got " + std::to_string(directions.size()));
  }
  HellyReport report;
  report.directions.assign(directions.begin(), directions.end());
  report.level = level;
  const ConvexRegion region = level_set(c, level, directions);
  report.feasible = !region.empty();
  if (report.feasible) {
    const Vector w = region.vertex_centroid();
    for (const UnitDirection& a : directions) report.witness_tails.push_back(c.tail(a.coords(), dot(a, w)));
    report.witness_in_cake = c.contains(w);
    report.witness = w;
  }
  return report;
}

HellyReport helly_certificate(const Cake& c, std::span<const UnitDirection> directions, double epsilon) {
  const double bound = 1.0 / (c.dim() + 1);
  if (!(epsilon >= 0.0 && epsilon < bound)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in [0, 1/(n+1))");
  }
  HellyReport report = helly_at_level(c, directions, bound - epsilon);
  report.epsilon = epsilon;
  return report;
}

}  // namespace cakecut
