#include "cakecut/api.hpp"

#include <httplib.h>

#include <cstdlib>
#include <mutex>
#include <thread>

#include "cakecut/cake_io.hpp"
#include "cakecut/depth.hpp"
#include "cakecut/error.hpp"
#include "cakecut/extremal.hpp"
#include "cakecut/game.hpp"
#include "cakecut/report_json.hpp"
#include "cakecut/svg.hpp"

namespace cakecut {

using nlohmann::json;

// ---------------------------------------------------------------------------
// CakeStore

std::shared_ptr<const StoredCake> CakeStore::insert(Cake cake, std::string name) {
  std::string id = content_hash(cake);
  return insert_with_id(std::move(id), std::move(cake), std::move(name));
}

std::shared_ptr<const StoredCake> CakeStore::insert_with_id(std::string id, Cake cake, std::string name) {
  auto entry = std::make_shared<const StoredCake>(StoredCake{id, std::move(name), std::move(cake)});
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cakes_.emplace(std::move(id), entry);
  return it->second;
}

std::shared_ptr<const StoredCake> CakeStore::find(const std::string& id) {
  {
    std::shared_lock lock(mutex_);
    auto it = cakes_.find(id);
    if (it != cakes_.end()) return it->second;
  }
  if (is_preset_name(id)) return insert_with_id(id, preset_cake(id), id);
  return nullptr;
}

std::size_t CakeStore::size() const {
  std::shared_lock lock(mutex_);
  return cakes_.size();
}

// ---------------------------------------------------------------------------
// Routing

namespace {

struct HttpError {
  int status;
  std::string code;
  std::string message;
  json detail = json::object();
};

ApiResponse json_response(int status, const json& body) { return ApiResponse{status, "application/json", body.dump()}; }

ApiResponse error_response(int status, const json& error) { return json_response(status, json{{"error", error}}); }

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::MixedDimensions:
    case ErrorCode::ZeroDirection:
      return 400;
    default:
      return 422;
  }
}

json parse_body(const std::string& body) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) throw ParseError("/", "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

const json& require_field(const json& body, const char* field) {
  if (!body.contains(field)) throw ParseError(std::string("/") + field, "missing field");
  return body[field];
}

std::shared_ptr<const StoredCake> lookup(CakeStore& store, const json& body) {
  const json& id = require_field(body, "cake_id");
  if (!id.is_string()) throw ParseError("/cake_id", "must be a string");
  auto entry = store.find(id.get<std::string>());
  if (!entry) throw HttpError{404, "unknown_cake", "no cake with id " + id.get<std::string>()};
  return entry;
}

Vector point_field(const json& body, const char* field, int dim) {
  Vector p = vector_from_json(require_field(body, field), std::string("/") + field);
  if (p.dim() != dim) throw Error(ErrorCode::MixedDimensions, std::string(field) + " has the wrong dimension");
  return p;
}

double number_field(const json& body, const char* field, double fallback) {
  if (!body.contains(field)) return fallback;
  if (!body[field].is_number()) throw ParseError(std::string("/") + field, "must be a number");
  return body[field].get<double>();
}

PavelStrategy pavel_from_json(const json& j, int dim) {
  if (!j.is_object()) throw ParseError("/pavel", "must be an object");
  const std::string kind = j.value("kind", "centroid");
  if (kind == "centroid") return PavelStrategy::centroid();
  if (kind == "centerpoint") return PavelStrategy::centerpoint(number_field(j, "tol", 1e-3));
  if (kind == "fixed") return PavelStrategy::fixed(point_field(j, "point", dim));
  throw ParseError("/pavel/kind", "expected centroid, centerpoint or fixed");
}

HavelStrategy havel_from_json(const json& j, int dim) {
  if (!j.is_object()) throw ParseError("/havel", "must be an object");
  const std::string kind = j.value("kind", "exact");
  if (kind == "exact") return HavelStrategy::exact_min();
  if (kind == "sampled") {
    const double count = number_field(j, "count", 4096);
    if (!(count >= 1)) throw ParseError("/havel/count", "must be >= 1");
    return HavelStrategy::sampled_min(static_cast<std::size_t>(count), static_cast<std::uint64_t>(number_field(j, "seed", 0)));
  }
  if (kind == "manual") return HavelStrategy::manual(point_field(j, "direction", dim));
  throw ParseError("/havel/kind", "expected exact, sampled or manual");
}

ApiResponse post_cakes(CakeStore& store, const std::string& body) {
  NamedDocument doc = decode_cake(body);
  auto entry = store.insert(std::move(doc.cake), doc.name);
  return json_response(201, cake_info_json(entry->cake, entry->id, entry->name));
}

ApiResponse get_cake(CakeStore& store, const std::string& id) {
  auto entry = store.find(id);
  if (!entry) throw HttpError{404, "unknown_cake", "no cake with id " + id};
  json j = cake_info_json(entry->cake, entry->id, entry->name);
  j["document"] = cake_to_json(entry->cake, entry->name);
  return json_response(200, j);
}

ApiResponse get_star(CakeStore& store, const std::string& n_text) {
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(n_text, &used);
    if (used != n_text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("/n", "star dimension must be an integer");
  }
  const StarBody sb = star_body(n);
  const std::string id = "star" + std::to_string(n);
  auto entry = store.insert_with_id(id, sb.cake, id);
  json j = cake_info_json(entry->cake, entry->id, entry->name);
  j["alpha"] = sb.alpha;
  j["simplex_volume"] = sb.simplex.volume();
  j["document"] = cake_to_json(entry->cake, entry->name);
  return json_response(200, j);
}

ApiResponse post_depth(CakeStore& store, const json& body) {
  auto entry = lookup(store, body);
  const Vector x = point_field(body, "point", entry->cake.dim());
  return json_response(200, depth_json(depth_at(entry->cake, x)));
}

ApiResponse post_bestcut(CakeStore& store, const json& body) {
  auto entry = lookup(store, body);
  const Vector x = point_field(body, "point", entry->cake.dim());
  const std::string mode = body.value("mode", "min");
  if (mode != "min" && mode != "max") throw ParseError("/mode", "expected min or max");
  const Cut cut = best_cut(entry->cake, x, mode == "min" ? CutMode::MinPiece : CutMode::MaxPiece);
  json j = cut_json(entry->cake, cut);
  j["mode"] = mode;
  return json_response(200, j);
}

ApiResponse post_tail(CakeStore& store, const json& body) {
  auto entry = lookup(store, body);
  const UnitDirection a = normalize(point_field(body, "direction", entry->cake.dim()));
  double offset = 0.0;
  if (body.contains("offset")) {
    offset = number_field(body, "offset", 0.0);
  } else if (body.contains("point")) {
    offset = dot(a, point_field(body, "point", entry->cake.dim()));
  } else {
    throw ParseError("/offset", "provide offset or point");
  }
  return json_response(200, {{"direction", to_json(a)}, {"offset", offset}, {"fraction", entry->cake.tail(a.coords(), offset)}});
}

ApiResponse post_centerpoint(CakeStore& store, const json& body) {
  auto entry = lookup(store, body);
  const double tol = number_field(body, "tol", 1e-3);
  return json_response(200, maximin_json(maximin_point(entry->cake, tol), true));
}

ApiResponse post_round(CakeStore& store, const json& body) {
  auto entry = lookup(store, body);
  const int dim = entry->cake.dim();
  const PavelStrategy p = pavel_from_json(body.value("pavel", json::object()), dim);
  const HavelStrategy h = havel_from_json(body.value("havel", json::object()), dim);
  return json_response(200, round_json(play_round(entry->cake, p, h, entry->id)));
}

ApiResponse post_render(CakeStore& store, const json& body) {
  auto entry = lookup(store, body);
  SvgOverlay overlay;
  if (body.contains("heatmap")) {
    overlay = HeatmapOverlay{static_cast<int>(number_field(body, "heatmap", 128))};
  } else if (body.contains("cut")) {
    const json& cut = body["cut"];
    const Vector x = point_field(cut, "point", entry->cake.dim());
    overlay = make_cut(entry->cake, x, normalize(point_field(cut, "direction", entry->cake.dim())));
  }
  return ApiResponse{200, "image/svg+xml", render_svg(entry->cake, overlay)};
}

}  // namespace

ApiResponse ApiService::handle(const std::string& method, const std::string& path, const std::string& body) {
  try {
    if (method == "GET" && path.rfind("/cakes/", 0) == 0) return get_cake(store_, path.substr(7));
    if (method == "GET" && path.rfind("/star/", 0) == 0) return get_star(store_, path.substr(6));
    if (method == "GET" && (path == "/" || path == "/health")) {
      return json_response(200, {{"service", "cakecut"}, {"cakes", store_.size()}});
    }
    if (method == "POST") {
      if (path == "/cakes") return post_cakes(store_, body);
      const json j = parse_body(body);
      if (path == "/depth") return post_depth(store_, j);
      if (path == "/bestcut") return post_bestcut(store_, j);
      if (path == "/tail") return post_tail(store_, j);
      if (path == "/centerpoint") return post_centerpoint(store_, j);
      if (path == "/game/round") return post_round(store_, j);
      if (path == "/render") return post_render(store_, j);
    }
    return error_response(404, {{"code", "not_found"}, {"message", method + " " + path + " is not an endpoint"}, {"detail", json::object()}});
  } catch (const HttpError& e) {
    return error_response(e.status, {{"code", e.code}, {"message", e.message}, {"detail", e.detail}});
  } catch (const Error& e) {
    return error_response(status_for(e.code()), error_json(e));
  } catch (const json::exception& e) {
    return error_response(400, {{"code", "bad_request"}, {"message", e.what()}, {"detail", json::object()}});
  } catch (const std::exception& e) {
    return error_response(500, {{"code", "internal"}, {"message", e.what()}, {"detail", json::object()}});
  }
}

int default_port() {
  if (const char* env = std::getenv("CAKECUT_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 8080;
}

// ---------------------------------------------------------------------------
// HTTP binding

struct ApiServer::Impl {
  httplib::Server server;
  std::thread thread;
};

ApiServer::ApiServer(ApiService& service, const ServeConfig& config) : impl_(std::make_unique<Impl>()) {
  auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
    res.set_header("Access-Control-Allow-Origin", "*");
  };
  impl_->server.Get(R"(/.*)", dispatch);
  impl_->server.Post(R"(/.*)", dispatch);
  impl_->server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  // httplib defaults to SO_REUSEPORT, which lets a second server share a busy port
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (config.port == 0) {
    port_ = impl_->server.bind_to_any_port(config.host);
  } else if (impl_->server.bind_to_port(config.host, config.port)) {
    port_ = config.port;
  } else {
    port_ = -1;
  }
  if (port_ <= 0) {
    throw Error(ErrorCode::BindFailure, "cannot bind " + config.host + ":" + std::to_string(config.port));
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  // stop() is a no-op until the accept loop runs
  impl_->server.wait_until_ready();
}

ApiServer::~ApiServer() {
  stop();
  wait();
}

void ApiServer::stop() { impl_->server.stop(); }

void ApiServer::wait() {
  if (impl_->thread.joinable()) impl_->thread.join();
}

void serve_api(ApiService& service, const ServeConfig& config) {
  ApiServer server(service, config);
  server.wait();
}

}  // namespace cakecut
