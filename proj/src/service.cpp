#include "taxman/service.hpp"

#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <unordered_map>

#include <httplib.h>
#include <json.hpp>

#include "taxman/born_free.hpp"
#include "taxman/bounds.hpp"
#include "taxman/serialization.hpp"

namespace taxman {

using nlohmann::json;

namespace {

// First pick of the restricted born-free line, or the largest legal pick
// when no prime-ratio pair is left but a move still is.
std::vector<Element> born_free_line(const GameState& state, std::optional<int> p_max) {
  const int n = state.size();
  std::vector<char> available(static_cast<std::size_t>(n) + 1, 0);
  for (Element e : state.in_play_elements()) available[e] = 1;
  const SpfTable spf(n);
  const BornFreeConfig cfg{n, p_max};
  const Matching m = born_free_matching(cfg, spf, available);
  if (!m.empty()) {
    return order_matching_standard(m, build_divisor_cover_graph(n, spf), spf);
  }
  const std::vector<Element> legal = state.legal_picks();
  if (legal.empty()) return {};
  return {legal.back()};
}

Hint born_free_hint(const GameState& state, std::optional<int> p_max) {
  Hint hint;
  GameState sim = state;
  for (bool first = true;; first = false) {
    const std::vector<Element> line = born_free_line(sim, p_max);
    if (line.empty()) break;
    if (first) hint.pick = line.front();
    for (Element e : line) sim.pick(e);
  }
  hint.projected_final_score = sim.player_score();
  return hint;
}

}  // namespace

Hint suggest(const GameState& state, std::string_view strategy, int oracle_cap) {
  if (!state.is_standard()) {
    throw std::invalid_argument("hints are only available for the standard game");
  }
  if (strategy != "born-free" && strategy != "born-free-5" && strategy != "oracle") {
    throw UnknownStrategy("unknown strategy '" + std::string(strategy) + "'");
  }
  if (state.finalized() || !state.has_legal_pick()) {
    return {std::nullopt, state.player_score()};
  }
  if (strategy == "oracle") {
    const Solution best = optimal_continuation(state, oracle_cap);
    Hint hint;
    if (!best.picks.empty()) hint.pick = best.picks.front();
    hint.projected_final_score = state.player_score() + best.score;
    return hint;
  }
  return born_free_hint(state, strategy == "born-free-5" ? std::optional<int>(5)
                                                         : std::nullopt);
}

struct Service::Impl {
  struct Session {
    std::mutex mutex;
    GameState state;
    std::chrono::steady_clock::time_point created;
    std::chrono::steady_clock::time_point last_touch;

    explicit Session(GameState s)
        : state(std::move(s)),
          created(std::chrono::steady_clock::now()),
          last_touch(created) {}
  };

  explicit Impl(ServiceConfig cfg) : config(std::move(cfg)), rng(std::random_device{}()) {
    routes();
  }

  static void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  static void send_error(httplib::Response& res, int status, std::string message,
                         std::string reason = {}) {
    json body{{"error", std::move(message)}};
    if (!reason.empty()) body["reason"] = std::move(reason);
    send_json(res, status, body);
  }

  std::string new_id() {
    std::uniform_int_distribution<std::uint64_t> dist;
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = dist(rng);
      for (int i = 0; i < 16; ++i, bits >>= 4) id.push_back(kHex[bits & 0xF]);
    }
    return id;
  }

  void expire_idle_locked() {
    const auto now = std::chrono::steady_clock::now();
    for (auto it = sessions.begin(); it != sessions.end();) {
      // A session whose mutex is held is in use and not idle.
      std::unique_lock lock(it->second->mutex, std::try_to_lock);
      if (lock && now - it->second->last_touch > config.session_ttl) {
        lock.unlock();
        it = sessions.erase(it);
      } else {
        ++it;
      }
    }
  }

  std::shared_ptr<Session> find_session(const std::string& id) {
    std::lock_guard lock(sessions_mutex);
    auto it = sessions.find(id);
    return it == sessions.end() ? nullptr : it->second;
  }

  void create_game(const httplib::Request& req, httplib::Response& res) {
    json body;
    try {
      body = json::parse(req.body);
    } catch (const json::parse_error&) {
      return send_error(res, 400, "body must be JSON");
    }
    const auto n = body.find("n");
    if (!body.is_object() || n == body.end() || !n->is_number_integer()) {
      return send_error(res, 400, "expected {\"n\": integer}");
    }
    const auto value = n->get<std::int64_t>();
    if (value < 1 || value > config.max_n) {
      return send_error(res, 400,
                        "n must be between 1 and " + std::to_string(config.max_n));
    }
    GameState state = GameState::standard(static_cast<int>(value));
    if (!state.has_legal_pick()) state.finalize();
    auto session = std::make_shared<Session>(std::move(state));
    std::string id;
    json payload;
    {
      std::lock_guard lock(sessions_mutex);
      expire_idle_locked();
      do {
        id = new_id();
      } while (sessions.contains(id));
      sessions.emplace(id, session);
      payload = state_payload(session->state);
    }
    send_json(res, 201, json{{"id", id}, {"state", payload}});
  }

  void get_game(const httplib::Request& req, httplib::Response& res) {
    auto session = find_session(req.matches[1]);
    if (!session) return send_error(res, 404, "unknown session");
    std::lock_guard lock(session->mutex);
    session->last_touch = std::chrono::steady_clock::now();
    send_json(res, 200, json{{"id", req.matches[1]}, {"state", state_payload(session->state)}});
  }

  void pick(const httplib::Request& req, httplib::Response& res) {
    auto session = find_session(req.matches[1]);
    if (!session) return send_error(res, 404, "unknown session");
    json body;
    try {
      body = json::parse(req.body);
    } catch (const json::parse_error&) {
      return send_error(res, 400, "body must be JSON");
    }
    const auto value = body.is_object() ? body.find("value") : body.end();
    if (value == body.end() || !value->is_number_integer()) {
      return send_error(res, 400, "expected {\"value\": integer}");
    }
    const auto raw = value->get<std::int64_t>();
    std::lock_guard lock(session->mutex);
    session->last_touch = std::chrono::steady_clock::now();
    GameState& state = session->state;
    const Element e = (raw < 1 || raw > state.size()) ? Element{0} : static_cast<Element>(raw);
    try {
      const Move move = state.pick(e);
      if (!state.has_legal_pick()) state.finalize();
      send_json(res, 200, json{{"state", state_payload(state)}, {"taxed", move.taxed}});
    } catch (const IllegalPick& err) {
      send_error(res, 409, "illegal pick", std::string(to_string(err.reason())));
    }
  }

  void hint(const httplib::Request& req, httplib::Response& res) {
    auto session = find_session(req.matches[1]);
    if (!session) return send_error(res, 404, "unknown session");
    const std::string strategy =
        req.has_param("strategy") ? req.get_param_value("strategy") : "born-free";
    GameState snapshot = [&] {
      std::lock_guard lock(session->mutex);
      session->last_touch = std::chrono::steady_clock::now();
      return session->state;
    }();
    try {
      const Hint h = suggest(snapshot, strategy, config.oracle_cap);
      send_json(res, 200,
                json{{"strategy", strategy},
                     {"suggested_pick", h.pick ? json(*h.pick) : json(nullptr)},
                     {"projected_final_score", h.projected_final_score}});
    } catch (const UnknownStrategy& err) {
      send_error(res, 400, err.what());
    } catch (const OracleInfeasible& err) {
      send_error(res, 400, err.what());
    }
  }

  void bounds(const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("n")) return send_error(res, 400, "missing n");
    long long n = 0;
    try {
      std::size_t used = 0;
      const std::string text = req.get_param_value("n");
      n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      return send_error(res, 400, "n must be an integer");
    }
    if (n < 1 || n > config.bounds_max_n) {
      return send_error(res, 400, "n must be between 1 and " +
                                      std::to_string(config.bounds_max_n));
    }
    const int key = static_cast<int>(n);
    {
      std::shared_lock lock(bounds_mutex);
      if (auto it = bounds_cache.find(key); it != bounds_cache.end()) {
        return send_json(res, 200, it->second);
      }
    }
    const json report =
        to_json(bounds_report(key, key <= config.oracle_cap, config.oracle_cap));
    {
      std::unique_lock lock(bounds_mutex);
      bounds_cache.emplace(key, report);
    }
    send_json(res, 200, report);
  }

  void routes() {
    server.set_post_routing_handler([this](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", config.cors_origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    server.Post("/games", [this](const auto& req, auto& res) { create_game(req, res); });
    server.Get(R"(/games/([0-9a-f]+))", [this](const auto& req, auto& res) { get_game(req, res); });
    server.Post(R"(/games/([0-9a-f]+)/pick)", [this](const auto& req, auto& res) { pick(req, res); });
    server.Get(R"(/games/([0-9a-f]+)/hint)", [this](const auto& req, auto& res) { hint(req, res); });
    server.Get("/bounds", [this](const auto& req, auto& res) { bounds(req, res); });
    server.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
          try {
            std::rethrow_exception(ep);
          } catch (const std::exception& e) {
            send_error(res, 500, e.what());
          } catch (...) {
            send_error(res, 500, "internal error");
          }
        });
  }

  ServiceConfig config;
  httplib::Server server;
  std::mutex sessions_mutex;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions;
  std::shared_mutex bounds_mutex;
  std::map<int, json> bounds_cache;
  std::mt19937_64 rng;
};

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

Service::~Service() { stop(); }

bool Service::listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int Service::bind_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool Service::serve() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

bool Service::running() const { return impl_->server.is_running(); }

}  // namespace taxman
