#include "ribbonlab/service.hpp"

#include <csignal>
#include <random>
#include <regex>

#include "httplib.h"
#include "ribbonlab/packing.hpp"

namespace ribbon {

namespace {

using nlohmann::json;

ServiceResponse error(int status, const std::string& code, const std::string& msg) {
  return {status, json{{"error", code}, {"message", msg}}};
}

json ribbon_field(const json& req) {
  if (!req.contains("ribbon")) throw RibbonError(ErrorCode::ParseError, "missing ribbon");
  return req["ribbon"];
}

Ribbon parse_request_ribbon(const json& req) {
  json r = ribbon_field(req);
  return canonicalize(parse_any(r.is_string() ? r.get<std::string>() : r.dump()));
}

json weights_json(const Weights& w) {
  return json{{"gamma", w[0]}, {"gamma0", w[1]}, {"gamma_ext", w[2]}, {"gamma_sad", w[3]}};
}

}  // namespace

json bundle_json(const InvariantBundle& b) {
  return json{{"gamma", b.gamma},         {"gamma0", b.gamma0},
              {"gamma_ext", b.gamma_ext}, {"gamma_sad", b.gamma_sad},
              {"sigma", b.sigma},         {"index", b.index},
              {"delta", b.delta},         {"delta0", b.delta0},
              {"touching", b.touching},   {"beta_lower", b.beta_lower},
              {"beta_upper", b.beta_upper}, {"beta_exact", b.beta_exact},
              {"n", b.n}};
}

json state_json(const std::string& id, const GameState& g) {
  int sigma = 0;
  for (int m : g.marks) sigma += m;
  json st{{"id", id},
          {"permutation", g.perm},
          {"marks", g.marks},
          {"to_move", std::string(1, g.to_move)},
          {"pools", {{"A", g.pool_a}, {"B", g.pool_b}}},
          {"sigma_so_far", sigma},
          {"history", g.history},
          {"status", g.finished ? "finished" : "in_progress"}};
  if (g.finished) {
    st["winner"] = std::string(1, g.winner);
    st["gamma"] = g.gamma;
    st["ribbon"] = to_string(final_ribbon(g));
  }
  return st;
}

std::size_t Service::game_count() {
  std::lock_guard<std::mutex> lk(mu_);
  return games_.size();
}

void Service::expire() {
  auto now = std::chrono::steady_clock::now();
  for (auto it = games_.begin(); it != games_.end();) {
    std::unique_lock<std::mutex> g(it->second->mu, std::try_to_lock);
    if (g.owns_lock() && now - it->second->touched > idle_)
      it = games_.erase(it);
    else
      ++it;
  }
}

std::shared_ptr<Service::Game> Service::find(const std::string& id) {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = games_.find(id);
  return it == games_.end() ? nullptr : it->second;
}

ServiceResponse Service::new_game(const json& req) {
  if (!req.contains("n") || !req["n"].is_number_integer())
    return error(400, "BadN", "n must be an even integer in [4, 12]");
  int n = req["n"].get<int>();
  std::uint64_t seed;
  if (req.contains("seed") && req["seed"].is_number_integer())
    seed = req["seed"].get<std::uint64_t>();
  else
    seed = std::random_device{}();
  auto game = std::make_shared<Game>();
  try {
    game->state = ribbon::new_game(n, seed);
  } catch (const GameError& e) {
    return error(400, e.code, e.what());
  }
  game->touched = std::chrono::steady_clock::now();
  std::string id;
  {
    std::lock_guard<std::mutex> lk(mu_);
    expire();
    id = "g" + std::to_string(next_id_++);
    games_[id] = game;
  }
  return {200, json{{"id", id},
                    {"seed", seed},
                    {"permutation", game->state.perm},
                    {"state", state_json(id, game->state)}}};
}

ServiceResponse Service::game_route(const std::string& id, const std::string& action,
                                    const json& req, const std::string& method) {
  auto game = find(id);
  if (!game) return error(404, "UnknownGame", "no game " + id);
  std::lock_guard<std::mutex> lk(game->mu);
  game->touched = std::chrono::steady_clock::now();
  GameState& g = game->state;
  if (action.empty() && method == "GET") return {200, state_json(id, g)};
  if (method != "POST") return error(405, "MethodNotAllowed", "use POST");
  if (action == "move") {
    if (!req.contains("node") || !req["node"].is_number_integer())
      return error(400, "BadRequest", "node must be an integer");
    try {
      play(g, req["node"].get<int>());
    } catch (const GameError& e) {
      return error(409, e.code, e.what());
    }
    return {200, state_json(id, g)};
  }
  if (action == "hint") {
    if (g.finished) return error(409, "GameFinished", "game is finished");
    if (!game->solver && static_cast<int>(g.perm.size()) <= kExactHintMaxN)
      game->solver = std::make_unique<GameSolver>(g.perm);
    json out = json::array();
    for (const auto& h : hints(g, game->solver.get())) {
      json e{{"node", h.node}, {"heuristic", h.heuristic}};
      e["verdict"] = h.verdict == '?' ? "unknown" : std::string(1, h.verdict);
      if (!h.flags.empty()) e["flags"] = h.flags;
      out.push_back(e);
    }
    return {200, json{{"to_move", std::string(1, g.to_move)},
                      {"mode", static_cast<int>(g.perm.size()) <= kExactHintMaxN
                                   ? "exact"
                                   : "heuristic"},
                      {"hints", out}}};
  }
  return error(404, "NotFound", "unknown game action " + action);
}

ServiceResponse Service::handle(const std::string& method, const std::string& path,
                                const std::string& body) {
  json req = json::object();
  if (!body.empty()) {
    req = json::parse(body, nullptr, false);
    if (req.is_discarded() || !req.is_object())
      return error(400, "ParseOrValidation", "body must be a JSON object");
  }
  static const std::regex game_re(R"(^/game/([A-Za-z0-9]+)(?:/(move|hint))?$)");
  std::smatch m;
  try {
    if (path == "/game/new") {
      if (method != "POST") return error(405, "MethodNotAllowed", "use POST");
      return new_game(req);
    }
    if (std::regex_match(path, m, game_re))
      return game_route(m[1].str(), m[2].str(), req, method);
    if (path == "/health") return {200, json{{"ok", true}}};
    if (method != "POST") return error(404, "NotFound", "unknown route " + path);
    if (path == "/invariants" || path == "/oracle" || path == "/iszero") {
      Ribbon a = parse_request_ribbon(req);
      if (path == "/invariants") {
        if (a.n() > 12) return error(422, "TooLarge", "n <= 12 for /invariants");
        json out = bundle_json(invariant_bundle(a));
        out["ribbon"] = to_string(a);
        return {200, out};
      }
      if (path == "/oracle") {
        if (a.n() > 8) return error(422, "TooLarge", "n <= 8 for /oracle");
        OracleSummary s = PackingOracle(a).summarize();
        json by_size = json::object();
        for (auto [k, v] : s.by_size) by_size[std::to_string(k)] = v;
        Weights mins{0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) mins[i] = static_cast<int>(s.minimal[i]);
        return {200, json{{"ribbon", to_string(a)},
                          {"minimum", weights_json(s.minimum)},
                          {"packings", s.packings},
                          {"by_size", by_size},
                          {"minimal_counts", weights_json(mins)},
                          {"compression", s.compression},
                          {"max_nondeg_saddles", s.max_nondeg_saddles},
                          {"min_nondeg_saddles", s.min_nondeg_saddles},
                          {"min_levels", s.min_levels}}};
      }
      ZeroResult z = is_gamma_zero(a);
      json chain = json::array(), steps = json::array();
      for (const auto& r : z.chain) chain.push_back(to_string(r));
      for (const auto& st : z.steps) steps.push_back({st.p, st.q});
      json out{{"ribbon", to_string(a)}, {"zero", z.zero}};
      if (z.zero)
        out["witness"] = {{"chain", chain}, {"steps", steps}};
      else
        out["witness"] = {{"reason", z.reason}};
      return {200, out};
    }
  } catch (const RibbonError& e) {
    return error(400, "ParseOrValidation", std::string(error_name(e.code)) + ": " + e.what());
  } catch (const json::exception& e) {
    return error(400, "ParseOrValidation", e.what());
  }
  return error(404, "NotFound", "unknown route " + path);
}

namespace {
httplib::Server* g_server = nullptr;
void on_signal(int) {
  if (g_server) g_server->stop();
}
}  // namespace

void serve(Service& svc, const std::string& host, int port) {
  httplib::Server srv;
  auto cors = [](httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  };
  auto forward = [&svc, cors](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r = svc.handle(req.method, req.path, req.body);
    res.status = r.status;
    cors(res);
    res.set_content(r.body.dump(), "application/json");
  };
  srv.Get(".*", forward);
  srv.Post(".*", forward);
  srv.Options(".*", [cors](const httplib::Request&, httplib::Response& res) {
    cors(res);
    res.status = 204;
  });
  g_server = &srv;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  srv.listen(host, port);
  g_server = nullptr;
}

}  // namespace ribbon
