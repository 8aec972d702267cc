#ifndef TAXMAN_SERVICE_HPP
#define TAXMAN_SERVICE_HPP

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "taxman/game.hpp"
#include "taxman/oracle.hpp"

namespace taxman {

struct ServiceConfig {
  int max_n = 10000;
  /// Bounds run an O(N³) matching; keep requests interactive.
  int bounds_max_n = 2000;
  int oracle_cap = kDefaultOracleCap;
  std::chrono::seconds session_ttl{3600};
  std::string cors_origin = "*";
};

class UnknownStrategy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Hint {
  std::optional<Element> pick;
  Weight projected_final_score = 0;
};

/// Suggested next pick for a standard game under a named strategy, with the
/// player's final score if the strategy is followed to the end.
///
/// Strategies: "oracle" (exact, pot size within oracle_cap), "born-free" and
/// "born-free-5". Mid-game born-free rebuilds the greedy matching on the
/// numbers still in play; this is a heuristic extension of the strategy,
/// which is only defined from the full pot.
/// Throws UnknownStrategy, or OracleInfeasible above the cap.
Hint suggest(const GameState& state, std::string_view strategy,
             int oracle_cap = kDefaultOracleCap);

/// HTTP/JSON API for interactive sessions:
///
///   POST /games {"n"}                 -> state payload + "id"
///   GET  /games/{id}                  -> state payload
///   POST /games/{id}/pick {"value"}   -> {"state", "taxed"}; 409 on illegal
///   GET  /games/{id}/hint?strategy=   -> {"suggested_pick", "projected_final_score"}
///   GET  /bounds?n=                   -> {"n", "lower", "upper", "optimal", "witness"}
///
/// Errors are {"error", "reason"?} with 400/404/409.
class Service {
 public:
  explicit Service(ServiceConfig config = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds and serves until stop(). Returns false if the bind fails.
  bool listen(const std::string& host, int port);
  /// Binds to a free port and returns it; follow with serve().
  int bind_any_port(const std::string& host);
  bool serve();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace taxman

#endif  // TAXMAN_SERVICE_HPP
