#include "doctest.h"
#include "ribbonlab/service.hpp"

using namespace ribbon;

TEST_CASE("invariant routes") {
  Service svc;
  auto r = svc.handle("POST", "/invariants", R"j({"ribbon":"(1+,6+,2-,4+,3+,5-)"})j");
  CHECK(r.status == 200);
  CHECK(r.body["gamma"] == 2);
  CHECK(r.body["gamma_sad"] == 1);
  auto o = svc.handle("POST", "/oracle", R"j({"ribbon":"(1-,3-,2-,4-)"})j");
  CHECK(o.status == 200);
  CHECK(o.body["minimum"]["gamma"] == 3);
  auto z = svc.handle("POST", "/iszero", R"j({"ribbon":"(1+,3+,2-,4+)"})j");
  CHECK(z.body["zero"] == true);
  CHECK(z.body["witness"]["chain"].back() == "(1+,2+)");
  auto bad = svc.handle("POST", "/invariants", R"j({"ribbon":"(1+,2+,3+,4+)"})j");
  CHECK(bad.status == 400);
  CHECK(bad.body["error"] == "ParseOrValidation");
  CHECK(svc.handle("POST", "/invariants", "not json").status == 400);
  CHECK(svc.handle("GET", "/health", "").status == 200);
  CHECK(svc.handle("GET", "/nope", "").status == 404);
}

TEST_CASE("game routes") {
  Service svc;
  auto n = svc.handle("POST", "/game/new", R"j({"n":6,"seed":5})j");
  REQUIRE(n.status == 200);
  std::string id = n.body["id"];
  CHECK(n.body["state"]["pools"]["A"] == 2);
  CHECK(svc.handle("POST", "/game/new", R"j({"n":7})j").body["error"] == "BadN");
  CHECK(svc.handle("GET", "/game/zzz", "").status == 404);
  auto occ = svc.handle("POST", "/game/" + id + "/move", R"j({"node":0})j");
  CHECK(occ.status == 409);
  auto h = svc.handle("POST", "/game/" + id + "/hint", "");
  CHECK(h.body["mode"] == "exact");
  int node = h.body["hints"][0]["node"];
  auto mv = svc.handle("POST", "/game/" + id + "/move", "{\"node\":" + std::to_string(node) + "}");
  CHECK(mv.status == 200);
  CHECK(mv.body["to_move"] == "B");
  CHECK(svc.handle("GET", "/game/" + id, "").body["history"].size() == 1);
  auto big = svc.handle("POST", "/game/new", R"j({"n":10,"seed":1})j");
  std::string bid = big.body["id"];
  CHECK(svc.handle("POST", "/game/" + bid + "/hint", "").body["mode"] == "heuristic");
  CHECK(svc.game_count() == 2);
}
