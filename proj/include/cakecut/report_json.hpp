#pragma once

// JSON views of results, shared by the CLI and the HTTP API so both print
// identical numbers for identical inputs.

#include <json.hpp>

#include "cakecut/depth.hpp"
#include "cakecut/error.hpp"
#include "cakecut/extremal.hpp"
#include "cakecut/game.hpp"

namespace cakecut {

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const UnitDirection& a);
nlohmann::json cut_json(const Cake& c, const Cut& cut);
nlohmann::json depth_json(const DepthCertificate& cert);
nlohmann::json maximin_json(const MaximinResult& r, bool converged);
nlohmann::json round_json(const GameRound& r);
nlohmann::json helly_json(const HellyReport& r);
nlohmann::json cake_info_json(const Cake& c, std::string_view id, std::string_view name);

// Endpoints of the cut's boundary line inside the cake's inflated bounding
// box (2D only; empty otherwise).
std::vector<Vector> cut_line_segment(const Cake& c, const Cut& cut);

// {"code", "message", "detail"} for any cakecut::Error.
nlohmann::json error_json(const Error& e);

Vector vector_from_json(const nlohmann::json& node, const std::string& where);

}  // namespace cakecut
