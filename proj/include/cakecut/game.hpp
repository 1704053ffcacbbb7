#pragma once

// The point-then-cut game: Pavel places a point, Havel answers with a cut
// through it and the round is scored by the cut-off fraction.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cakecut/cake.hpp"
#include "cakecut/depth.hpp"

namespace cakecut {

struct PavelStrategy {
  enum class Kind { Centroid, Centerpoint, Fixed };
  Kind kind = Kind::Centroid;
  double tol = 1e-3;  // Centerpoint
  Vector point;       // Fixed

  static PavelStrategy centroid() { return {}; }
  static PavelStrategy centerpoint(double tol) { return {Kind::Centerpoint, tol, {}}; }
  static PavelStrategy fixed(Vector p) { return {Kind::Fixed, 1e-3, std::move(p)}; }
};

struct HavelStrategy {
  enum class Kind { ExactMin, SampledMin, Manual };
  Kind kind = Kind::ExactMin;
  std::size_t count = 0;  // SampledMin
  std::uint64_t seed = 0; // SampledMin
  Vector direction;       // Manual; normalized on use

  static HavelStrategy exact_min() { return {}; }
  static HavelStrategy sampled_min(std::size_t count, std::uint64_t seed = 0) {
    return {Kind::SampledMin, count, seed, {}};
  }
  static HavelStrategy manual(Vector direction) { return {Kind::Manual, 0, 0, std::move(direction)}; }
};

struct GameRound {
  std::string cake_id;
  Vector pavel_point;
  Cut havel_cut;
  double fraction = 0.0;
  double bound = 0.0;  // 1/(n+1)
};

// The first `count` directions of a seeded uniform stream on the sphere, so
// the set for a smaller count is a prefix of the set for a larger one.
std::vector<UnitDirection> random_directions(int dim, std::size_t count, std::uint64_t seed);

Vector resolve_pavel(const Cake& c, const PavelStrategy& p);

GameRound play_round(const Cake& c, const PavelStrategy& p, const HavelStrategy& h,
                     std::string cake_id = "");

struct NamedCake {
  std::string id;
  Cake cake;
};

struct ExperimentSummary {
  std::vector<GameRound> rounds;
  double min_fraction = 0.0;
  std::string argmin_id;
};

// One round per cake in input order. When `csv` is given, writes a header
// and one row per round: cake_id,n,pavel_x1..pavel_xN,fraction,bound,fraction_minus_bound.
ExperimentSummary run_experiment(std::span<const NamedCake> cakes, const PavelStrategy& p,
                                 const HavelStrategy& h, std::ostream* csv = nullptr);

}  // namespace cakecut
