#include "cakecut/cake_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "cakecut/error.hpp"
#include "cakecut/extremal.hpp"

namespace cakecut {

using nlohmann::json;

nlohmann::json cake_to_json(const Cake& c, std::string_view name) {
  json doc = json::object();
  doc["dim"] = c.dim();
  if (!name.empty()) doc["name"] = std::string(name);
  json pieces = json::array();
  for (const Simplex& s : c.pieces()) {
    json verts = json::array();
    for (const Vector& v : s.vertices()) verts.push_back(std::vector<double>(v.coords().begin(), v.coords().end()));
    pieces.push_back(std::move(verts));
  }
  doc["pieces"] = std::move(pieces);
  return doc;
}

namespace {

Vector parse_point(const json& node, int dim, const std::string& where) {
  if (!node.is_array()) throw ParseError(where, "expected an array of coordinates");
  if (static_cast<int>(node.size()) != dim) {
    throw ParseError(where, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(node.size()));
  }
  Vector p = Vector::zeros(dim);
  for (int i = 0; i < dim; ++i) {
    const json& x = node[static_cast<std::size_t>(i)];
    if (!x.is_number()) throw ParseError(where + "/" + std::to_string(i), "coordinate must be a number");
    p[i] = x.get<double>();
    if (!std::isfinite(p[i])) throw ParseError(where + "/" + std::to_string(i), "coordinate must be finite");
  }
  return p;
}

}  // namespace

NamedDocument cake_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("/", "cake document must be an object");
  if (!doc.contains("dim")) throw ParseError("/dim", "missing field");
  if (!doc["dim"].is_number_integer()) throw ParseError("/dim", "must be an integer");
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("/dim", "must be >= 1");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("/name", "must be a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<Simplex> pieces;
  if (doc.contains("polygon")) {
    if (dim != 2) throw ParseError("/polygon", "polygon documents must have dim 2");
    const json& loop = doc["polygon"];
    if (!loop.is_array()) throw ParseError("/polygon", "expected an array of vertices");
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < loop.size(); ++i) pts.push_back(parse_point(loop[i], 2, "/polygon/" + std::to_string(i)));
    pieces = triangulate_polygon(pts);
  } else {
    if (!doc.contains("pieces")) throw ParseError("/pieces", "missing field");
    const json& arr = doc["pieces"];
    if (!arr.is_array()) throw ParseError("/pieces", "expected an array of simplices");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string where = "/pieces/" + std::to_string(k);
      const json& piece = arr[k];
      if (!piece.is_array()) throw ParseError(where, "expected an array of vertices");
      if (piece.size() != static_cast<std::size_t>(dim) + 1) {
        throw ParseError(where, "expected " + std::to_string(dim + 1) + " vertices, got " + std::to_string(piece.size()));
      }
      std::vector<Vector> verts;
      for (std::size_t i = 0; i < piece.size(); ++i) verts.push_back(parse_point(piece[i], dim, where + "/" + std::to_string(i)));
      pieces.emplace_back(std::move(verts));
    }
  }
  return NamedDocument{std::move(name), validate_cake(std::move(pieces))};
}

std::string encode_cake(const Cake& c, std::string_view name) { return cake_to_json(c, name).dump(); }

NamedDocument decode_cake(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return cake_from_json(doc);
}

NamedDocument load_cake_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open cake file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode_cake(ss.str());
}

std::string content_hash(const Cake& c) {
  const std::string text = encode_cake(c);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

bool is_preset_name(std::string_view name) {
  if (name == "square" || name == "triangle" || name == "lshape") return true;
  if (name.size() == 5 && name.substr(0, 4) == "star") {
    const char d = name[4];
    return d >= '1' && d <= '0' + kMaxStarDimension;
  }
  return false;
}

Cake preset_cake(std::string_view name) {
  if (name == "square") {
    return validate_cake({Simplex({{0, 0}, {1, 0}, {1, 1}}), Simplex({{0, 0}, {1, 1}, {0, 1}})});
  }
  if (name == "triangle") return validate_cake({Simplex({{0, 0}, {1, 0}, {0, 1}})});
  if (name == "lshape") {
    const std::vector<Vector> loop{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    return validate_cake(triangulate_polygon(loop));
  }
  if (is_preset_name(name)) return star_body(name[4] - '0').cake;
  throw Error(ErrorCode::InvalidArgument, "unknown preset cake: " + std::string(name));
}

}  // namespace cakecut
