#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "wordle/service.hpp"

namespace httplib {
class Server;
}

namespace wordle::service {

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string cors_origin = "*";
  // Snapshot file and how often it is rewritten; no persistence when unset.
  std::optional<std::string> snapshot_path;
  std::chrono::seconds snapshot_interval{30};
};

// Installs the /v1 routes on `server`. `store` must outlive it.
void register_routes(httplib::Server& server, SessionStore& store,
                     const std::string& cors_origin = "*");

// Blocks until the server stops. Returns false if the port could not be bound.
bool run_server(SessionStore& store, const ServerOptions& options);

}  // namespace wordle::service
