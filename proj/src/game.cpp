#include "cakecut/game.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cakecut/error.hpp"
#include "cakecut/format.hpp"

namespace cakecut {

std::vector<UnitDirection> random_directions(int dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<UnitDirection> out;
  out.reserve(count);
  while (out.size() < count) {
    Vector g = Vector::zeros(dim);
    for (int i = 0; i < dim; ++i) g[i] = gauss(rng);
    if (g.norm() < 1e-12) continue;
    out.push_back(normalize(g));
  }
  return out;
}

Vector resolve_pavel(const Cake& c, const PavelStrategy& p) {
  switch (p.kind) {
    case PavelStrategy::Kind::Centroid:
      return c.centroid();
    case PavelStrategy::Kind::Centerpoint:
      if (c.dim() > 3) {
        throw Error(ErrorCode::StrategyDimensionMismatch, "centerpoint strategy needs a cake of dimension <= 3");
      }
      try {
        return maximin_point(c, p.tol).point;
      } catch (const NoConvergenceError& e) {
        return e.best().point;
      }
    case PavelStrategy::Kind::Fixed:
      if (p.point.dim() != c.dim()) {
        throw Error(ErrorCode::StrategyDimensionMismatch, "fixed point dimension differs from the cake's");
      }
      for (double v : p.point.coords()) {
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "fixed point is not finite");
      }
      return p.point;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Pavel strategy");
}

namespace {

Cut havel_cut(const Cake& c, const Vector& x, const HavelStrategy& h) {
  switch (h.kind) {
    case HavelStrategy::Kind::ExactMin:
      return best_cut(c, x, CutMode::MinPiece);
    case HavelStrategy::Kind::SampledMin: {
      if (h.count < 1) throw Error(ErrorCode::InvalidArgument, "sampled strategy needs count >= 1");
      const std::vector<UnitDirection> dirs = random_directions(c.dim(), h.count, h.seed);
      Cut best = make_cut(c, x, dirs.front());
      for (std::size_t i = 1; i < dirs.size(); ++i) {
        Cut cut = make_cut(c, x, dirs[i]);
        if (cut.fraction < best.fraction) best = std::move(cut);
      }
      return best;
    }
    case HavelStrategy::Kind::Manual:
      if (h.direction.dim() != c.dim()) {
        throw Error(ErrorCode::StrategyDimensionMismatch, "manual direction dimension differs from the cake's");
      }
      return make_cut(c, x, normalize(h.direction));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Havel strategy");
}

}  // namespace

GameRound play_round(const Cake& c, const PavelStrategy& p, const HavelStrategy& h, std::string cake_id) {
  Vector x = resolve_pavel(c, p);
  Cut cut = havel_cut(c, x, h);
  const double fraction = cut.fraction;
  return GameRound{std::move(cake_id), std::move(x), std::move(cut), fraction, 1.0 / (c.dim() + 1)};
}

ExperimentSummary run_experiment(std::span<const NamedCake> cakes, const PavelStrategy& p,
                                 const HavelStrategy& h, std::ostream* csv) {
  if (cakes.empty()) throw Error(ErrorCode::EmptySuite, "experiment suite is empty");
  ExperimentSummary summary;
  summary.min_fraction = INFINITY;
  for (const NamedCake& nc : cakes) {
    GameRound round = play_round(nc.cake, p, h, nc.id);
    if (round.fraction < summary.min_fraction) {
      summary.min_fraction = round.fraction;
      summary.argmin_id = nc.id;
    }
    summary.rounds.push_back(std::move(round));
  }
  if (csv != nullptr) {
    int width = 0;
    for (const NamedCake& nc : cakes) width = std::max(width, nc.cake.dim());
    *csv << "cake_id,n";
    for (int i = 1; i <= width; ++i) *csv << ",pavel_x" << i;
    *csv << ",fraction,bound,fraction_minus_bound\n";
    for (const GameRound& r : summary.rounds) {
      *csv << r.cake_id << ',' << r.pavel_point.dim();
      for (int i = 0; i < width; ++i) {
        *csv << ',';
        if (i < r.pavel_point.dim()) *csv << format_double(r.pavel_point[i]);
      }
      *csv << ',' << format_double(r.fraction) << ',' << format_double(r.bound) << ','
           << format_double(r.fraction - r.bound) << '\n';
    }
  }
  return summary;
}

}  // namespace cakecut
