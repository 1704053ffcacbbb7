#pragma once

// Cake documents:
//
//   {"dim": 2, "name": "unit-square",
//    "pieces": [[[0,0],[1,0],[1,1]], [[0,0],[1,1],[0,1]]]}
//
// Each piece lists n+1 vertices of n coordinates. A 2D document may give a
// counter-clockwise "polygon" (array of [x, y]) instead of "pieces"; it is
// triangulated on decode.

#include <string>
#include <string_view>

#include <json.hpp>

#include "cakecut/cake.hpp"

namespace cakecut {

struct NamedDocument {
  std::string name;
  Cake cake;
};

nlohmann::json cake_to_json(const Cake& c, std::string_view name = {});

// Throws ParseError (JSON pointer location) or validation errors.
NamedDocument cake_from_json(const nlohmann::json& doc);

std::string encode_cake(const Cake& c, std::string_view name = {});

// Throws ParseError (byte offset or JSON pointer) or validation errors.
NamedDocument decode_cake(std::string_view text);

NamedDocument load_cake_file(const std::string& path);

// 16 hex digits of FNV-1a over the canonical unnamed encoding.
std::string content_hash(const Cake& c);

// "square", "triangle", "lshape", "star1".."star8"; throws InvalidArgument otherwise.
Cake preset_cake(std::string_view name);
bool is_preset_name(std::string_view name);

}  // namespace cakecut
