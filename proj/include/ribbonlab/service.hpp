#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "json.hpp"

#include "ribbonlab/game.hpp"
#include "ribbonlab/solver.hpp"

namespace ribbon {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

// Routes are plain functions of (state, request); the HTTP layer only
// forwards method, path and body.
class Service {
 public:
  explicit Service(std::chrono::seconds idle_expiry = std::chrono::hours(1))
      : idle_(idle_expiry) {}

  ServiceResponse handle(const std::string& method, const std::string& path,
                         const std::string& body);
  std::size_t game_count();

 private:
  struct Game {
    std::mutex mu;
    GameState state;
    std::unique_ptr<GameSolver> solver;
    std::chrono::steady_clock::time_point touched;
  };

  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Game>> games_;
  std::uint64_t next_id_ = 1;
  std::chrono::seconds idle_;

  ServiceResponse new_game(const nlohmann::json& req);
  ServiceResponse game_route(const std::string& id, const std::string& action,
                             const nlohmann::json& req, const std::string& method);
  std::shared_ptr<Game> find(const std::string& id);
  void expire();
};

nlohmann::json state_json(const std::string& id, const GameState& g);
nlohmann::json bundle_json(const InvariantBundle& b);

// Blocks until stopped (SIGINT/SIGTERM).
void serve(Service& svc, const std::string& host, int port);

}  // namespace ribbon
