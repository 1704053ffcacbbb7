#include <doctest.h>

#include <cmath>

#include "cakecut/cake.hpp"
#include "cakecut/cake_io.hpp"
#include "cakecut/extremal.hpp"
#include "support.hpp"

using namespace cakecut;
using testsupport::Rng;

namespace {

Cake square() {
  return validate_cake({Simplex({{0, 0}, {1, 0}, {1, 1}}), Simplex({{0, 0}, {1, 1}, {0, 1}})});
}
Cake triangle() { return validate_cake({Simplex({{0, 0}, {1, 0}, {0, 1}})}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("validate_cake examples") {
  const Cake sq = square();
  CHECK(sq.measure() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sq.pieces().size() == 2);
  CHECK(sq.certificate().method == OverlapMethod::ExactClip2D);

  const Simplex t({{0, 0}, {1, 0}, {0, 1}});
  CHECK(code_of([&] { validate_cake({t, t}); }) == ErrorCode::OverlappingPieces);
  try {
    validate_cake({t, t});
  } catch (const OverlappingPiecesError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
    CHECK(e.overlap() == doctest::Approx(0.5));
  }
  CHECK(code_of([] { validate_cake({}); }) == ErrorCode::EmptyCake);
  CHECK(code_of([] { validate_cake({Simplex({{0, 0}, {1, 0}, {0, 1}}), Simplex({{0.0}, {1.0}})}); }) ==
        ErrorCode::MixedDimensions);

  const StarBody sb = star_body(2);
  CHECK(sb.cake.pieces().size() == 3);
}

TEST_CASE("overlap detection in every dimension") {
  // 1D
  CHECK(code_of([] { validate_cake({Simplex({{0.0}, {2.0}}), Simplex({{1.0}, {3.0}})}); }) ==
        ErrorCode::OverlappingPieces);
  CHECK_NOTHROW(validate_cake({Simplex({{0.0}, {2.0}}), Simplex({{2.0}, {3.0}})}));
  // 3D: shared facet is fine, shifted copy overlaps
  const Simplex a({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Simplex b({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Simplex c({{0.1, 0.1, 0.1}, {1.1, 0.1, 0.1}, {0.1, 1.1, 0.1}, {0.1, 0.1, 1.1}});
  const Cake ok = validate_cake({a, b});
  CHECK(ok.measure() == doctest::Approx(a.volume() + b.volume()));
  CHECK(code_of([&] { validate_cake({a, c}); }) == ErrorCode::OverlappingPieces);
  // 4D star pieces only touch at the origin
  CHECK_NOTHROW(star_body(4));
}

TEST_CASE("measure examples") {
  CHECK(measure(square()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(measure(star_body(2).cake) == doctest::Approx(3.897114317029974).epsilon(1e-14));
  CHECK(measure(validate_cake({Simplex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})})) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("tail examples") {
  const Cake sq = square();
  CHECK(tail(sq, {normalize(Vector{1, 0}), 0.25}) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(tail(sq, {normalize(Vector{-1, 0}), -0.25}) == doctest::Approx(0.25).epsilon(1e-15));
  const StarBody sb = star_body(2);
  for (const Vector& a : sb.vertices) CHECK(tail(sb.cake, {normalize(a), 0.0}) >= 1.0 / 3.0);
}

TEST_CASE("cake tail matches the clipping oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Cake c = testsupport::random_star_cake(rng);
    const Vector a = testsupport::random_unit(rng, 2);
    const double s = testsupport::uniform(rng, -1.0, 1.0);
    CHECK(std::abs(tail(c, {normalize(a), s}) - testsupport::oracle_tail_2d(c, a[0], a[1], s)) <= 1e-12);
  }
}

TEST_CASE("cake tail monotone, saturating, complementary") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Cake c = trial % 2 ? testsupport::random_star_cake(rng) : testsupport::random_octahedron_cake(rng);
    const UnitDirection a = normalize(testsupport::random_unit(rng, c.dim()));
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const Vector& v : c.vertices()) {
      lo = std::min(lo, dot(a, v));
      hi = std::max(hi, dot(a, v));
    }
    CHECK(tail(c, {a, lo - 0.1}) == 1.0);
    CHECK(tail(c, {a, hi + 0.1}) == 0.0);
    double prev = 1.0;
    for (int k = 0; k <= 50; ++k) {
      const double s = lo + (hi - lo) * k / 50.0;
      const double f = tail(c, {a, s});
      CHECK(f <= prev);
      prev = f;
      const double s2 = testsupport::uniform(rng, lo, hi);
      CHECK(std::abs(tail(c, {a, s2}) + tail(c, {-a, -s2}) - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("quantile examples") {
  const UnitDirection x = normalize(Vector{1, 0});
  CHECK(quantile(square(), x, 1.0 / 3.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(quantile(square(), x, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(quantile(triangle(), x, 4.0 / 9.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(code_of([&] { quantile(square(), x, 0.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { quantile(square(), x, 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("quantile inverts the tail") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Cake c = trial % 3 == 0 ? testsupport::random_octahedron_cake(rng) : testsupport::random_star_cake(rng);
    const UnitDirection a = normalize(testsupport::random_unit(rng, c.dim()));
    const double t = testsupport::uniform(rng, 0.001, 0.999);
    CHECK(std::abs(tail(c, {a, quantile(c, a, t)}) - t) <= 1e-8);
  }
}

TEST_CASE("translation covariance") {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Cake c = trial % 2 ? testsupport::random_star_cake(rng) : testsupport::random_octahedron_cake(rng);
    const Vector v = testsupport::random_unit(rng, c.dim()) * testsupport::uniform(rng, 0.0, 10.0);
    const Cake moved = c.translated(v);
    const UnitDirection a = normalize(testsupport::random_unit(rng, c.dim()));
    const double s = testsupport::uniform(rng, -1.0, 1.0);
    CHECK(std::abs(tail(moved, {a, s + dot(a, v)}) - tail(c, {a, s})) <= 1e-9);
  }
}

TEST_CASE("measure additivity") {
  Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const Cake c = trial % 2 ? testsupport::random_star_cake(rng) : testsupport::random_octahedron_cake(rng);
    const std::size_t drop = std::uniform_int_distribution<std::size_t>(0, c.pieces().size() - 1)(rng);
    std::vector<Simplex> rest;
    for (std::size_t i = 0; i < c.pieces().size(); ++i)
      if (i != drop) rest.push_back(c.pieces()[i]);
    const double expected = c.measure() - c.pieces()[drop].volume();
    CHECK(std::abs(validate_cake(rest).measure() - expected) <= 1e-12 * c.measure());
  }
}

TEST_CASE("sample_points") {
  const auto pts = sample_points(square(), 100000, 7);
  Vector mean = Vector::zeros(2);
  for (const Vector& p : pts) mean += p * (1.0 / pts.size());
  CHECK(std::abs(mean[0] - 0.5) < 0.01);
  CHECK(std::abs(mean[1] - 0.5) < 0.01);

  const Cake tri = triangle();
  CHECK(sample_points(tri, 1, 42)[0] == sample_points(tri, 1, 42)[0]);
  for (const Vector& p : sample_points(tri, 100000, 3)) {
    for (double w : tri.pieces()[0].barycentric(p)) CHECK_MESSAGE(w >= -1e-12, "outside the triangle");
  }
}

TEST_CASE("centroid and containment") {
  CHECK(square().centroid()[0] == doctest::Approx(0.5));
  CHECK(square().centroid()[1] == doctest::Approx(0.5));
  CHECK(triangle().centroid()[0] == doctest::Approx(1.0 / 3.0));
  CHECK(square().contains(Vector{0.5, 0.5}));
  CHECK_FALSE(square().contains(Vector{1.5, 0.5}));
  const Cake l = preset_cake("lshape");
  CHECK(l.measure() == doctest::Approx(3.0));
  CHECK_FALSE(l.contains(Vector{1.5, 1.5}));
}
