#pragma once

// HTTP API over the engine. Every route is served by ApiService::handle so it
// can be exercised without a socket; serve_api binds it to cpp-httplib.
//
//   POST /cakes          cake document -> 201 {id, dim, measure, ...}
//   GET  /cakes/{id}     -> {id, dim, measure, document}
//   GET  /star/{n}       -> star body, stored under id "star{n}"
//   POST /depth          {cake_id, point}
//   POST /bestcut        {cake_id, point, mode: "min" | "max"}
//   POST /tail           {cake_id, direction, offset | point}
//   POST /centerpoint    {cake_id, tol?}
//   POST /game/round     {cake_id, pavel: {...}, havel: {...}}
//   POST /render         {cake_id, heatmap?: N, cut?: {point, direction}} -> SVG
//
// Failures return {"error": {code, message, detail}}. Codes are the engine's
// error names plus unknown_cake, not_found, bad_request, internal.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "cakecut/cake.hpp"

namespace cakecut {

struct StoredCake {
  std::string id;
  std::string name;
  Cake cake;
};

// Concurrent reads; inserts publish an immutable entry atomically. Preset ids
// ("square", "triangle", "lshape", "star1".."star8") are built on first use.
class CakeStore {
 public:
  std::shared_ptr<const StoredCake> insert(Cake cake, std::string name);
  std::shared_ptr<const StoredCake> insert_with_id(std::string id, Cake cake, std::string name);
  std::shared_ptr<const StoredCake> find(const std::string& id);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const StoredCake>> cakes_;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

class ApiService {
 public:
  ApiResponse handle(const std::string& method, const std::string& path, const std::string& body);
  CakeStore& store() { return store_; }

 private:
  CakeStore store_;
};

struct ServeConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
};

// Port from CAKECUT_PORT when set, else 8080.
int default_port();

// Serves `service` on a background thread until stopped or destroyed.
// Port 0 binds an ephemeral port. Throws Error(BindFailure).
class ApiServer {
 public:
  ApiServer(ApiService& service, const ServeConfig& config);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  int port() const { return port_; }
  void stop();
  void wait();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

// Blocks until the server stops. Throws Error(BindFailure) when the port cannot be bound.
void serve_api(ApiService& service, const ServeConfig& config);

}  // namespace cakecut
