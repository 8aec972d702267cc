// taxman: play, sweep, bound and replay the taxman game from the command line.
//
// Exit codes: 0 success / player win, 1 usage or I/O error, 2 tie,
// 3 player loss or illegal replay.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "taxman/born_free.hpp"
#include "taxman/bounds.hpp"
#include "taxman/matching_bridge.hpp"
#include "taxman/oracle.hpp"
#include "taxman/serialization.hpp"
#include "taxman/service.hpp"

namespace {

using namespace taxman;

constexpr int kExitUsage = 1;
constexpr int kExitTie = 2;
constexpr int kExitLoss = 3;

const std::vector<std::string> kStrategies{"born-free", "born-free-5", "fas-lower", "oracle"};

std::vector<Element> strategy_line(int n, const std::string& strategy, int oracle_cap) {
  if (strategy == "born-free") return picks_of(born_free_play({n, std::nullopt}).sequence);
  if (strategy == "born-free-5") return picks_of(born_free_play({n, 5}).sequence);
  if (strategy == "fas-lower") return fas_lower_bound(n).picks;
  if (n > oracle_cap) {
    throw OracleInfeasible("n = " + std::to_string(n) + " exceeds the oracle cap " +
                           std::to_string(oracle_cap) + " (see --oracle-cap)");
  }
  OracleCache cache(OracleCache::default_path());
  return cache.solve(n, oracle_cap).picks;
}

Weight strategy_score(int n, const std::string& strategy, int oracle_cap) {
  GameState state = GameState::standard(n);
  replay_into(state, strategy_line(n, strategy, oracle_cap));
  return state.player_score();
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_moves(std::ostream& out, const MoveSequence& moves) {
  for (std::size_t i = 0; i < moves.size(); ++i) {
    out << "move " << i + 1 << ": pick " << moves[i].pick << ", tax";
    for (Element t : moves[i].taxed) out << ' ' << t;
    out << '\n';
  }
}

int exit_for(Outcome outcome) {
  switch (outcome) {
    case Outcome::win:
      return 0;
    case Outcome::tie:
      return kExitTie;
    case Outcome::loss:
      return kExitLoss;
  }
  return kExitLoss;
}

int cmd_play(int n, const std::string& strategy, int oracle_cap) {
  GameState state = GameState::standard(n);
  replay_into(state, strategy_line(n, strategy, oracle_cap));
  std::cout << "N = " << n << ", strategy " << strategy << '\n';
  print_moves(std::cout, state.history());
  if (state.history().empty()) std::cout << "no moves\n";
  if (state.has_legal_pick()) {
    std::cout << "strategy stops with legal picks left; the taxman takes the rest\n";
    state.concede();
  } else {
    state.finalize();
  }
  std::cout << "player " << state.player_score() << ", taxman " << state.taxman_score()
            << '\n'
            << to_string(state.outcome()) << '\n';
  return exit_for(state.outcome());
}

int cmd_sweep(int n_min, int n_max, int step, const std::string& strategy, int oracle_cap,
              const std::string& out_path) {
  Output out(out_path);
  auto& os = out.stream();
  os << "N,p(N)\n";
  for (int n = n_min; n <= n_max; n += step) {
    const Weight score = strategy_score(n, strategy, oracle_cap);
    os << n << ',' << std::fixed << std::setprecision(8)
       << static_cast<double>(score) / (static_cast<double>(n) * (n + 1) / 2.0) << '\n';
  }
  return 0;
}

int cmd_bounds(int n_min, int n_max, int step, int oracle_cap, const std::string& out_path) {
  Output out(out_path);
  auto& os = out.stream();
  os << "N,opt(N),upper(N),lower(N)\n";
  std::optional<OracleCache> cache;
  for (int n = n_min; n <= n_max; n += step) {
    os << n << ',';
    if (n <= oracle_cap) {
      if (!cache) cache.emplace(OracleCache::default_path());
      os << cache->solve(n, oracle_cap).score;
    }
    os << ',' << upper_bound(n) << ',' << fas_lower_bound(n).score << '\n';
  }
  return 0;
}

int cmd_replay(const std::string& path) {
  GameRecord record;
  try {
    record = read_game_record(path);
  } catch (const FormatError& e) {
    std::cerr << "taxman replay: " << e.what() << '\n';
    return kExitUsage;
  }
  GameState state = GameState::standard(record.n);
  try {
    replay_into(state, record.picks);
  } catch (const IllegalPick& e) {
    std::cout << "ILLEGAL at index " << e.index().value_or(0) << ": pick " << e.pick()
              << " (" << to_string(e.reason()) << ")\n";
    return kExitLoss;
  }
  const SpfTable spf(record.n);
  const Matching m = sequence_to_matching(state.history(), build_divisor_cover_graph(record.n, spf));
  std::cout << "N = " << record.n << ", LEGAL\n";
  print_moves(std::cout, state.history());
  if (state.has_legal_pick()) {
    std::cout << "sequence stops with legal picks left; the taxman takes the rest\n";
  }
  state.concede();
  std::cout << "player " << state.player_score() << ", taxman " << state.taxman_score()
            << '\n'
            << "matching";
  for (const CoverEdge& e : m.sorted_pairs()) std::cout << " (" << e.lower << ',' << e.upper << ')';
  std::cout << "\nmatching weight " << m.weight() << '\n';
  return 0;
}

int cmd_serve(const std::string& host, int port, int oracle_cap) {
  ServiceConfig config;
  config.oracle_cap = oracle_cap;
  Service service(config);
  std::cerr << "taxman: serving on http://" << host << ':' << port << '\n';
  if (!service.listen(host, port)) {
    std::cerr << "taxman: cannot listen on " << host << ':' << port << '\n';
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taxman game solver, bounds and playground server"};
  app.require_subcommand(1);
  app.fallthrough();

  int oracle_cap = kDefaultOracleCap;
  app.add_option("--oracle-cap", oracle_cap, "Largest pot solved exactly")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string strategy = "born-free";
  int n = 0;
  auto* play = app.add_subcommand("play", "Play one game with a strategy");
  play->add_option("n", n, "Pot size")->required()->check(CLI::PositiveNumber);
  play->add_option("--strategy", strategy)
      ->check(CLI::IsMember(kStrategies))
      ->capture_default_str();

  int n_min = 0, n_max = 0, step = 1;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Pot fraction per N as CSV (N,p(N))");
  sweep->add_option("n_min", n_min)->required()->check(CLI::PositiveNumber);
  sweep->add_option("n_max", n_max)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--step", step)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--strategy", strategy)
      ->check(CLI::IsMember(kStrategies))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "CSV destination (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Optimal, upper and lower bound per N as CSV");
  bounds->add_option("n_min", n_min)->required()->check(CLI::PositiveNumber);
  bounds->add_option("n_max", n_max)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--step", step)->check(CLI::PositiveNumber)->capture_default_str();
  bounds->add_option("--out", out_path, "CSV destination (default stdout)");

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Validate a recorded game");
  replay->add_option("file", replay_path, "JSON game record {\"n\", \"picks\"}")->required();

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Start the HTTP playground API");
  serve->add_option("--port", port)->check(CLI::Range(1, 65535))->capture_default_str();
  serve->add_option("--host", host)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*play) return cmd_play(n, strategy, oracle_cap);
    if (*sweep) return cmd_sweep(n_min, n_max, step, strategy, oracle_cap, out_path);
    if (*bounds) return cmd_bounds(n_min, n_max, step, oracle_cap, out_path);
    if (*replay) return cmd_replay(replay_path);
    if (*serve) return cmd_serve(host, port, oracle_cap);
  } catch (const std::exception& e) {
    std::cerr << "taxman: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
