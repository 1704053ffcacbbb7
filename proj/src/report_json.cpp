#include "cakecut/report_json.hpp"

#include <algorithm>
#include <cmath>

#include "cakecut/cake_io.hpp"

namespace cakecut {

using nlohmann::json;

json to_json(const Vector& v) { return std::vector<double>(v.coords().begin(), v.coords().end()); }

json to_json(const UnitDirection& a) { return std::vector<double>(a.coords().begin(), a.coords().end()); }

std::vector<Vector> cut_line_segment(const Cake& c, const Cut& cut) {
  if (c.dim() != 2) return {};
  Vector lo = c.bbox_lo();
  Vector hi = c.bbox_hi();
  for (int i = 0; i < 2; ++i) {
    const double pad = 0.1 * (hi[i] - lo[i]);
    lo[i] -= pad;
    hi[i] += pad;
  }
  // Liang-Barsky on p(s) = anchor + s * (-a1, a0).
  const Vector& p = cut.anchor;
  const double d[2] = {-cut.direction[1], cut.direction[0]};
  double s0 = -INFINITY;
  double s1 = INFINITY;
  for (int i = 0; i < 2; ++i) {
    if (std::abs(d[i]) < 1e-300) {
      if (p[i] < lo[i] || p[i] > hi[i]) return {};
      continue;
    }
    double a = (lo[i] - p[i]) / d[i];
    double b = (hi[i] - p[i]) / d[i];
    if (a > b) std::swap(a, b);
    s0 = std::max(s0, a);
    s1 = std::min(s1, b);
  }
  if (s0 > s1) return {};
  return {Vector{p[0] + s0 * d[0], p[1] + s0 * d[1]}, Vector{p[0] + s1 * d[0], p[1] + s1 * d[1]}};
}

json cut_json(const Cake& c, const Cut& cut) {
  json j = {{"anchor", to_json(cut.anchor)},
            {"direction", to_json(cut.direction)},
            {"offset", dot(cut.direction, cut.anchor)},
            {"fraction", cut.fraction}};
  const std::vector<Vector> line = cut_line_segment(c, cut);
  if (!line.empty()) j["line"] = {to_json(line[0]), to_json(line[1])};
  return j;
}

json depth_json(const DepthCertificate& cert) {
  return {{"point", to_json(cert.point)},
          {"lower", cert.lower},
          {"upper", cert.upper},
          {"method", depth_method_name(cert.method)},
          {"witness_direction", to_json(cert.witness.direction)},
          {"witness_fraction", cert.witness.fraction}};
}

json maximin_json(const MaximinResult& r, bool converged) {
  return {{"point", to_json(r.point)}, {"lower", r.lower},           {"upper", r.upper},
          {"rounds", r.rounds},        {"inside_cake", r.inside_cake}, {"converged", converged}};
}

json round_json(const GameRound& r) {
  return {{"cake_id", r.cake_id},
          {"pavel_point", to_json(r.pavel_point)},
          {"direction", to_json(r.havel_cut.direction)},
          {"fraction", r.fraction},
          {"bound", r.bound},
          {"fraction_minus_bound", r.fraction - r.bound}};
}

json helly_json(const HellyReport& r) {
  json dirs = json::array();
  for (const UnitDirection& a : r.directions) dirs.push_back(to_json(a));
  json j = {{"directions", dirs},       {"epsilon", r.epsilon},
            {"level", r.level},         {"feasible", r.feasible},
            {"witness_in_cake", r.witness_in_cake}, {"witness_tails", r.witness_tails}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json cake_info_json(const Cake& c, std::string_view id, std::string_view name) {
  json j = {{"id", std::string(id)},
            {"dim", c.dim()},
            {"measure", c.measure()},
            {"pieces", c.pieces().size()},
            {"bbox", {to_json(c.bbox_lo()), to_json(c.bbox_hi())}},
            {"validation",
             {{"method", overlap_method_name(c.certificate().method)},
              {"samples_per_pair", c.certificate().samples_per_pair},
              {"sampled_pairs", c.certificate().sampled_pairs},
              {"max_overlap", c.certificate().max_overlap}}}};
  if (!name.empty()) j["name"] = std::string(name);
  return j;
}

json error_json(const Error& e) {
  json detail = json::object();
  if (const auto* o = dynamic_cast<const OverlappingPiecesError*>(&e)) {
    detail = {{"first", o->first()}, {"second", o->second()}, {"overlap", o->overlap()}};
  } else if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    detail = {{"location", p->location()}};
  } else if (const auto* n = dynamic_cast<const NoConvergenceError*>(&e)) {
    detail = {{"best", maximin_json(n->best(), false)}};
  }
  return {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"detail", detail}};
}

Vector vector_from_json(const json& node, const std::string& where) {
  if (!node.is_array() || node.empty()) throw ParseError(where, "expected a non-empty array of numbers");
  std::vector<double> c;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) throw ParseError(where + "/" + std::to_string(i), "expected a number");
    c.push_back(node[i].get<double>());
  }
  return Vector(std::move(c));
}

}  // namespace cakecut
