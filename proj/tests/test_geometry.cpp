#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cakecut/geometry.hpp"
#include "support.hpp"

using namespace cakecut;
using testsupport::Rng;

namespace {

Simplex unit_triangle() { return Simplex({{0, 0}, {1, 0}, {0, 1}}); }
Simplex corner3() { return Simplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

ConvexRegion unit_square() { return ConvexRegion::box(Vector{0, 0}, Vector{1, 1}); }

}  // namespace

TEST_CASE("normalize") {
  const UnitDirection a = normalize(Vector{3, 4});
  CHECK(a[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(a[1] == doctest::Approx(0.8).epsilon(1e-15));
  const UnitDirection z = normalize(Vector{0, 0, 2});
  CHECK(z.coords()[0] == 0.0);
  CHECK(z.coords()[1] == 0.0);
  CHECK(z.coords()[2] == 1.0);
  CHECK_THROWS_AS(normalize(Vector{0, 0}), Error);
  try {
    normalize(Vector{0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDirection);
  }
  // tiny but nonzero vectors still normalize
  const UnitDirection t = normalize(Vector{3e-200, 4e-200});
  CHECK(t[0] == doctest::Approx(0.6));
}

TEST_CASE("normalize yields unit norm") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Vector v = testsupport::random_unit(rng, 4) * std::exp(testsupport::uniform(rng, -50, 50));
    CHECK(std::abs(normalize(v).as_vector().norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("simplex volume") {
  CHECK(simplex_volume(unit_triangle()) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(simplex_volume(corner3()) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  const double h = std::sqrt(3.0) / 2.0;
  const Simplex regular({{1, 0}, {-0.5, h}, {-0.5, -h}});
  CHECK(simplex_volume(regular) == doctest::Approx(1.299038105676658).epsilon(1e-14));
  CHECK(simplex_volume(Simplex({{0.0}, {-3.0}})) == 3.0);
}

TEST_CASE("simplex orientation is canonical") {
  const Simplex cw({{0, 0}, {0, 1}, {1, 0}});
  const Vector e1 = cw.vertex(1) - cw.vertex(0);
  const Vector e2 = cw.vertex(2) - cw.vertex(0);
  CHECK(e1[0] * e2[1] - e1[1] * e2[0] > 0.0);
  CHECK(cw.volume() == doctest::Approx(0.5));
}

TEST_CASE("simplex construction errors") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] { Simplex({{0, 0}, {1, 1}, {2, 2}}); }) == ErrorCode::DegenerateSimplex);
  CHECK(code_of([] { Simplex({{0, 0}, {1, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Simplex({{0, 0}, {1, 0}, {0, 1, 2}}); }) == ErrorCode::MixedDimensions);
  CHECK(code_of([] { Simplex({{0, 0}, {1, 0}, {0, NAN}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("simplex tail fraction examples") {
  CHECK(simplex_tail_fraction(unit_triangle(), normalize(Vector{1, 0}), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(simplex_tail_fraction(unit_triangle(), normalize(Vector{0, 1}), 0.25) ==
        doctest::Approx(0.5625).epsilon(1e-14));
  CHECK(simplex_tail_fraction(corner3(), normalize(Vector{1, 0, 0}), 0.5) == doctest::Approx(0.125).epsilon(1e-14));
  // 2D cross-check against the clipping oracle
  const Cake tri = validate_cake({unit_triangle()});
  CHECK(testsupport::oracle_tail_2d(tri, 0, 1, 0.25) == doctest::Approx(0.5625).epsilon(1e-14));
}

TEST_CASE("tail of heights") {
  const double h1[] = {1.0, 1.0, 1.0};
  const double h2[] = {-1.0, -2.0, -3.0};
  const double h3[] = {1.0, -1.0};
  const double h4[] = {0.0, 1.0, -1.0};
  CHECK(tail_fraction_from_heights(h1) == 1.0);
  CHECK(tail_fraction_from_heights(h2) == 0.0);
  CHECK(tail_fraction_from_heights(h3) == 0.5);
  CHECK(tail_fraction_from_heights(h4) == 0.5);
  // a triangle with heights (1, -1, -1): similar sub-triangle scaled by 1/2
  const double h5[] = {1.0, -1.0, -1.0};
  CHECK(tail_fraction_from_heights(h5) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("tail is nonincreasing and saturates") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 5;
    const Simplex s = testsupport::random_simplex(rng, dim);
    const UnitDirection a = normalize(testsupport::random_unit(rng, dim));
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const Vector& v : s.vertices()) {
      lo = std::min(lo, dot(a, v));
      hi = std::max(hi, dot(a, v));
    }
    CHECK(simplex_tail_fraction(s, a, lo - 1e-3) == 1.0);
    CHECK(simplex_tail_fraction(s, a, lo) == 1.0);
    CHECK(simplex_tail_fraction(s, a, hi + 1e-3) == 0.0);
    double prev = 1.0;
    for (int k = 0; k <= 64; ++k) {
      const double f = simplex_tail_fraction(s, a, lo + (hi - lo) * k / 64.0);
      CHECK(f <= prev);
      CHECK(f >= 0.0);
      prev = f;
    }
  }
}

TEST_CASE("complement identity") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 1 + trial % 6;
    const Simplex s = testsupport::random_simplex(rng, dim);
    const Vector av = testsupport::random_unit(rng, dim);
    const UnitDirection a = normalize(av);
    const double t = testsupport::uniform(rng, -2.5, 2.5);
    const double sum = simplex_tail_fraction(s, a, t) + simplex_tail_fraction(s, -a, -t);
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("tail agrees with Monte Carlo") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + trial % 3;
    const Simplex s = testsupport::random_fat_simplex(rng, dim);
    const Vector a = testsupport::random_unit(rng, dim);
    const double t = dot(a, s.centroid()) + testsupport::uniform(rng, -0.5, 0.5);
    const double exact = simplex_tail_fraction(s, normalize(a), t);
    const auto mc = testsupport::monte_carlo_simplex_tail(s, a, t, 100000, rng);
    const double bound = 4.0 * std::sqrt(exact * (1.0 - exact) / 1e5) + 1e-3;
    CHECK(std::abs(mc.fraction - exact) <= bound);
  }
}

TEST_CASE("tail is affine invariant") {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + trial % 3;
    const Simplex s = testsupport::random_simplex(rng, dim);
    const Vector a = testsupport::random_unit(rng, dim);
    const double t = dot(a, s.centroid()) + testsupport::uniform(rng, -0.7, 0.7);

    Eigen::MatrixXd m = Eigen::MatrixXd::Random(dim, dim) + 2.0 * Eigen::MatrixXd::Identity(dim, dim);
    if (std::abs(m.determinant()) < 0.1) continue;
    Vector shift = testsupport::random_unit(rng, dim) * 3.0;
    std::vector<Vector> moved;
    for (const Vector& v : s.vertices()) moved.push_back(testsupport::apply(m, v, shift));
    // {<y, a> >= t} maps to {<z, M^-T a> >= t + <shift, M^-T a>}
    Eigen::VectorXd ae(dim);
    for (int k = 0; k < dim; ++k) ae[k] = a[k];
    const Eigen::VectorXd be = m.inverse().transpose() * ae;
    Vector b = Vector::zeros(dim);
    for (int k = 0; k < dim; ++k) b[k] = be[k];
    const double scale = b.norm();
    const double t2 = (t + dot(shift, b)) / scale;

    const double before = simplex_tail_fraction(s, normalize(a), t);
    const double after = simplex_tail_fraction(Simplex(moved), normalize(b), t2);
    CHECK(std::abs(before - after) <= 1e-9);
  }
}

TEST_CASE("clip_convex examples") {
  const ConvexRegion half = clip_convex(unit_square(), normalize(Vector{1, 0}), 0.5);
  CHECK(half.measure() == doctest::Approx(0.5).epsilon(1e-14));
  for (const Vector& v : half.vertices) CHECK(v[0] <= 0.5 + 1e-15);
  CHECK(clip_convex(unit_square(), normalize(Vector{1, 0}), -1.0).empty());
  const ConvexRegion quad = clip_convex(ConvexRegion::from_simplex(unit_triangle()), normalize(Vector{0, 1}), 0.25);
  CHECK(quad.vertices.size() == 4);
  CHECK(quad.measure() == doctest::Approx(0.21875).epsilon(1e-14));
  // a halfspace containing everything is a no-op
  CHECK(clip_convex(unit_square(), normalize(Vector{1, 1}), 5.0).measure() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ConvexRegion::from_simplex(Simplex({{0.0}, {1.0}})), Error);
}

TEST_CASE("clip measure matches exact tail") {
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 2 + trial % 2;
    const Simplex s = testsupport::random_simplex(rng, dim);
    const UnitDirection a = normalize(testsupport::random_unit(rng, dim));
    const double t = dot(a, s.centroid()) + testsupport::uniform(rng, -1.0, 1.0);
    const ConvexRegion r = clip_convex(ConvexRegion::from_simplex(s), a, t);
    const double expected = s.volume() * (1.0 - simplex_tail_fraction(s, a, t));
    CHECK(std::abs(r.measure() - expected) <= 1e-9);
  }
}

TEST_CASE("3D clipping keeps a closed polyhedron") {
  Rng rng(16);
  ConvexRegion r = ConvexRegion::box(Vector{-1, -1, -1}, Vector{1, 1, 1});
  for (int k = 0; k < 30; ++k) r = clip_convex(r, normalize(testsupport::random_unit(rng, 3)), 0.8);
  // every plane is at distance 0.8 from the center, so that ball survives
  CHECK(r.measure() > 4.0 / 3.0 * std::numbers::pi * 0.8 * 0.8 * 0.8 * 0.99);
  CHECK(r.measure() < 8.0);
  // Euler characteristic V - E + F = 2
  std::size_t edges = 0;
  for (const auto& f : r.facets) edges += f.size();
  CHECK(static_cast<long>(r.vertices.size()) - static_cast<long>(edges / 2) + static_cast<long>(r.facets.size()) ==
        2);
}

TEST_CASE("triangulate_polygon examples") {
  const std::vector<Vector> tri{{0, 0}, {1, 0}, {0, 1}};
  const auto one = triangulate_polygon(tri);
  REQUIRE(one.size() == 1);
  CHECK(one[0].volume() == doctest::Approx(0.5));

  const std::vector<Vector> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto two = triangulate_polygon(square);
  CHECK(two.size() == 2);
  CHECK(measure(validate_cake(two)) == doctest::Approx(1.0).epsilon(1e-15));

  const std::vector<Vector> l{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  const auto four = triangulate_polygon(l);
  CHECK(four.size() == 4);
  CHECK(measure(validate_cake(four)) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("triangulate_polygon errors") {
  auto code_of = [](std::vector<Vector> loop) {
    try {
      triangulate_polygon(loop);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) == ErrorCode::WrongOrientation);
  CHECK(code_of({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, -1}}) == ErrorCode::SelfIntersecting);
  CHECK(code_of({{0, 0}, {1, 1}, {1, 0}, {0, 1}}) == ErrorCode::DegeneratePolygon);
  CHECK(code_of({{0, 0}, {1, 0}, {2, 0}}) == ErrorCode::DegeneratePolygon);
  CHECK(code_of({{0, 0}, {1, 0}}) == ErrorCode::DegeneratePolygon);
}

TEST_CASE("random star polygons triangulate into valid cakes") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + trial % 15;
    std::vector<Vector> loop;
    for (int i = 0; i < k; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / k;
      const double r = testsupport::uniform(rng, 0.3, 1.5);
      loop.push_back(Vector{r * std::cos(angle), r * std::sin(angle)});
    }
    const auto pieces = triangulate_polygon(loop);
    CHECK(pieces.size() == static_cast<std::size_t>(k - 2));
    const Cake c = validate_cake(pieces);
    CHECK(c.measure() == doctest::Approx(polygon_signed_area(loop)).epsilon(1e-12));
  }
}
