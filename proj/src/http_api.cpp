#include "wordle/http_api.hpp"

#include <atomic>
#include <condition_variable>
#include <iostream>
#include <thread>

#include <httplib.h>

namespace wordle::service {

namespace {

using nlohmann::json;

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view kind, std::string_view message) {
  send_json(res, status, {{"error", kind}, {"message", message}});
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  auto body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) throw InvalidRequest("request body must be a JSON object");
  return body;
}

template <typename T>
T field(const json& body, const char* name, T fallback) {
  auto it = body.find(name);
  if (it == body.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw InvalidRequest(std::string("field '") + name + "' has the wrong type");
  }
}

SessionRequest to_request(const json& body) {
  SessionRequest req;
  const auto length = field<long long>(body, "length", 5);
  if (length < 1) throw InvalidRequest("length must be positive");
  req.length = static_cast<std::size_t>(length);
  try {
    req.mode = parse_mode(field<std::string>(body, "mode", "easy"));
    req.algorithm = parse_algorithm(field<std::string>(body, "algorithm", "greedy"));
  } catch (const ContractViolation& e) {
    throw InvalidRequest(e.what());
  }
  if (body.contains("vocab_id") && !body["vocab_id"].is_null()) {
    req.vocab_id = field<std::string>(body, "vocab_id", "");
  }
  if (body.contains("max_tries") && !body["max_tries"].is_null()) {
    req.max_tries = field<int>(body, "max_tries", 0);
  }
  return req;
}

// Maps store exceptions onto status codes.
template <typename F>
void guarded(httplib::Response& res, SessionStore& store, const std::string& id, F&& f) {
  try {
    f();
  } catch (const NotFound& e) {
    send_error(res, 404, "not_found", e.what());
  } catch (const InvalidRequest& e) {
    send_error(res, 422, "invalid_request", e.what());
  } catch (const ContradictionError& e) {
    json body{{"error", "contradiction"}, {"message", e.what()}};
    if (!id.empty()) {
      try {
        auto view = store.get_session(id);
        body["can_undo"] = view.can_undo;
        body["session"] = view.to_json();
      } catch (const NotFound&) {
      }
    }
    send_json(res, 409, body);
  } catch (const DataError& e) {
    send_error(res, 500, "data_error", e.what());
  }
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store, const std::string& cors_origin) {
  server.set_default_headers({{"Access-Control-Allow-Origin", cors_origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});

  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/v1/vocabularies", [&store](const httplib::Request&, httplib::Response& res) {
    auto out = json::array();
    for (const auto& e : store.registry().list()) {
      out.push_back({{"id", e.id}, {"length", e.vocab->word_length()}, {"size", e.vocab->size()}});
    }
    send_json(res, 200, out);
  });

  server.Post("/v1/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, store, "", [&] { send_json(res, 201, store.create_session(to_request(parse_body(req))).to_json()); });
  });

  server.Get("/v1/sessions/:id", [&store](const httplib::Request& req, httplib::Response& res) {
    const auto& id = req.path_params.at("id");
    guarded(res, store, id, [&] { send_json(res, 200, store.get_session(id).to_json()); });
  });

  server.Post("/v1/sessions/:id/feedback", [&store](const httplib::Request& req, httplib::Response& res) {
    const auto& id = req.path_params.at("id");
    guarded(res, store, id, [&] {
      const auto body = parse_body(req);
      if (!body.contains("guess") || !body.contains("pattern")) {
        throw InvalidRequest("body needs 'guess' and 'pattern'");
      }
      const auto guess = field<std::string>(body, "guess", "");
      const auto pattern = field<std::string>(body, "pattern", "");
      send_json(res, 200, store.apply_feedback(id, guess, pattern).to_json());
    });
  });

  server.Post("/v1/sessions/:id/undo", [&store](const httplib::Request& req, httplib::Response& res) {
    const auto& id = req.path_params.at("id");
    guarded(res, store, id, [&] { send_json(res, 200, store.undo(id).to_json()); });
  });
}

bool run_server(SessionStore& store, const ServerOptions& options) {
  httplib::Server server;
  register_routes(server, store, options.cors_origin);

  std::mutex mutex;
  std::condition_variable cv;
  bool stopping = false;
  std::thread saver;
  if (options.snapshot_path) {
    store.load_snapshot(*options.snapshot_path);
    saver = std::thread([&] {
      std::unique_lock lock(mutex);
      while (!cv.wait_for(lock, options.snapshot_interval, [&] { return stopping; })) {
        try {
          store.save_snapshot(*options.snapshot_path);
        } catch (const std::exception& e) {
          std::cerr << "snapshot failed: " << e.what() << '\n';
        }
      }
    });
  }

  const bool ok = server.listen(options.host, options.port);

  if (saver.joinable()) {
    {
      std::lock_guard lock(mutex);
      stopping = true;
    }
    cv.notify_all();
    saver.join();
    store.save_snapshot(*options.snapshot_path);
  }
  return ok;
}

}  // namespace wordle::service
