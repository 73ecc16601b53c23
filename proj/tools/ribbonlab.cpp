#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbonlab/enumeration.hpp"
#include "ribbonlab/game.hpp"
#include "ribbonlab/packing.hpp"
#include "ribbonlab/service.hpp"
#include "ribbonlab/solver.hpp"
#include "ribbonlab/verify.hpp"

using namespace ribbon;

namespace {

struct Globals {
  std::string cache;
  bool recheck = false;
  int jobs = 1;
} G;

void load_cache() {
  if (G.cache.empty()) {
    if (const char* env = std::getenv("RIBBONLAB_CACHE")) G.cache = env;
  }
  if (G.cache.empty()) return;
  std::ifstream in(G.cache);
  if (!in) return;
  std::size_t bad = 0;
  std::size_t n = default_solver().load(in, G.recheck, &bad);
  std::cerr << "cache: loaded " << n << " entries from " << G.cache;
  if (G.recheck) std::cerr << ", " << bad << " mismatches";
  std::cerr << "\n";
}

void save_cache() {
  if (G.cache.empty()) return;
  std::ofstream out(G.cache);
  default_solver().save(out);
}

int cmd_compute(const std::string& text, const std::string& kind, bool trace) {
  Ribbon a = canonicalize(parse_any(text));
  if (kind == "all") {
    InvariantBundle b = invariant_bundle(a);
    std::cout << "gamma=" << b.gamma << " gamma0=" << b.gamma0 << " ext=" << b.gamma_ext
              << " sad=" << b.gamma_sad << " sigma=" << b.sigma << " index=" << b.index
              << " delta=" << b.delta << " delta0=" << b.delta0
              << " touching=" << b.touching << " beta_lower=" << b.beta_lower
              << " beta_upper=" << b.beta_upper
              << " beta_exact=" << (b.beta_exact ? "true" : "false") << " n=" << b.n
              << "\n";
  } else {
    Kind k = parse_kind(kind);
    std::cout << (k == Kind::Gamma      ? "gamma"
                  : k == Kind::Gamma0   ? "gamma0"
                  : k == Kind::GammaExt ? "ext"
                                        : "sad")
              << "=" << invariant(a, k) << "\n";
  }
  if (trace) {
    Kind k = kind == "all" ? Kind::Gamma : parse_kind(kind);
    std::cout << trace_to_string(solve_trace(a, k));
  }
  return 0;
}

int cmd_oracle(const std::string& text, bool count, bool by_size, bool emit) {
  Ribbon a = canonicalize(parse_any(text));
  if (a.n() > 10) throw RibbonError(ErrorCode::LimitExceeded, "oracle is limited to n <= 10");
  PackingOracle o(a);
  if (emit) {
    o.for_each([&](const Packing& p) {
      std::cout << o.packing_json(p) << "\n";
      return true;
    });
  }
  OracleSummary s = o.summarize();
  if (count) std::cout << "packings=" << s.packings << "\n";
  if (by_size)
    for (auto [k, v] : s.by_size) std::cout << "size=" << k << " count=" << v << "\n";
  if (!count && !by_size)
    std::cout << "gamma=" << s.minimum[0] << " gamma0=" << s.minimum[1]
              << " ext=" << s.minimum[2] << " sad=" << s.minimum[3]
              << " packings=" << s.packings << " minimal=" << s.minimal[0]
              << " compression=" << s.compression << " min_levels=" << s.min_levels
              << "\n";
  return 0;
}

int cmd_iszero(const std::string& text) {
  Ribbon a = canonicalize(parse_any(text));
  ZeroResult z = is_gamma_zero(a);
  if (!z.zero) {
    std::cout << "zero=false reason=" << z.reason << "\n";
    return 0;
  }
  std::cout << "zero=true steps=" << z.steps.size() << "\n";
  for (std::size_t i = 0; i < z.chain.size(); ++i) {
    std::cout << "  " << to_string(z.chain[i]);
    if (i < z.steps.size())
      std::cout << "  cancel nodes " << z.steps[i].p << "," << z.steps[i].q;
    std::cout << "\n";
  }
  return 0;
}

int cmd_enumerate(int n, bool positive, bool negative, std::optional<int> sigma,
                  bool with_gamma) {
  RibbonFilter f;
  if (positive + negative + sigma.has_value() > 1)
    throw CLI::ValidationError("--positive, --negative and --sigma are exclusive");
  if (positive) f.mode = RibbonFilter::Positive;
  if (negative) f.mode = RibbonFilter::Negative;
  if (sigma) {
    f.mode = RibbonFilter::Sigma;
    f.sigma = *sigma;
  }
  std::vector<Ribbon> batch;
  auto flush = [&] {
    std::vector<int> g(batch.size(), 0);
    if (with_gamma) {
      int jobs = std::max(1, G.jobs);
      std::vector<std::thread> th;
      for (int t = 0; t < jobs; ++t)
        th.emplace_back([&, t] {
          for (std::size_t i = t; i < batch.size(); i += jobs)
            g[i] = invariant(batch[i], Kind::Gamma);
        });
      for (auto& x : th) x.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      std::cout << to_string(batch[i]);
      if (with_gamma) std::cout << "\tg=" << g[i];
      std::cout << "\n";
    }
    batch.clear();
  };
  for_each_ribbon(n, f, [&](const Ribbon& a) {
    batch.push_back(a);
    if (batch.size() >= 4096) flush();
  });
  flush();
  return 0;
}

int cmd_count(int n, bool check) {
  CountRow row = count_ribbons(n);
  std::cout << "n=" << n << " zigzag=" << row.zigzag << " ribbons=" << row.ribbons
            << " positive=" << row.positive;
  for (auto& [s, c] : row.per_sigma) std::cout << " sigma" << s << "=" << c;
  if (!check) {
    std::cout << "\n";
    return 0;
  }
  std::uint64_t total = 0, pos = 0;
  std::map<int, std::uint64_t> per;
  for_each_ribbon(n, {}, [&](const Ribbon& a) {
    ++total;
    pos += is_positive(a);
    ++per[signature(a)];
  });
  bool ok = BigInt(total) == row.ribbons && BigInt(pos) == row.positive;
  for (auto& [s, c] : row.per_sigma) ok = ok && BigInt(per[s]) == c;
  std::cout << " streamed=" << total << " check " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 2;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, const std::string& out) {
  std::vector<std::string> names =
      suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& name : names) {
    int nm = n > 0 ? n : default_n_max(name);
    SuiteReport r = run_suite(name, nm, seed, G.jobs);
    std::cout << report_text(r);
    ok = ok && r.passed();
    all.push_back(nlohmann::json::parse(report_json(r)));
  }
  if (!out.empty()) {
    std::ofstream f(out);
    f << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  }
  return ok ? 0 : 2;
}

int cmd_stats(int n) {
  if (n > 8) throw RibbonError(ErrorCode::LimitExceeded, "stats is exhaustive; n <= 8");
  auto hist = gamma_distribution(n);
  std::uint64_t total = 0;
  for (auto [g, c] : hist) total += c;
  std::cout << "n=" << n << " ribbons=" << total << "\n";
  for (auto [g, c] : hist)
    std::cout << "gamma=" << g << " gamma/n=" << static_cast<double>(g) / n
              << " count=" << c << " share=" << static_cast<double>(c) / total << "\n";
  std::cout << "realizable (sigma,gamma):";
  for (auto [s, g] : realizable_pairs(n)) std::cout << " (" << s << "," << g << ")";
  std::cout << "\n";
  return 0;
}

int cmd_game_solve(int n, std::uint64_t seed) {
  GameState g = new_game(n, seed);
  GameSolver s(g.perm);
  char w = s.winner(g.marks);
  std::cout << "seed=" << seed << " permutation=";
  for (std::size_t i = 0; i < g.perm.size(); ++i)
    std::cout << (i ? "," : "(") << g.perm[i];
  std::cout << ") winner=" << w << " states=" << s.states() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbonlab: ribbon invariants, packing oracle and the ribbon game"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache", G.cache, "memo cache file (or RIBBONLAB_CACHE)");
  app.add_flag("--recheck", G.recheck, "recompute cached entries on load");
  app.add_option("--jobs", G.jobs, "worker threads for enumerate/verify")->check(CLI::PositiveNumber);

  std::string ribbon_text, kind = "all";
  bool trace = false, count = false, by_size = false, emit = false;
  int n = 0;
  bool positive = false, negative = false, with_gamma = false, check = false;
  std::optional<int> sigma;
  std::string suite, out;
  std::uint64_t seed = 1;
  int port = 8787;
  std::string host = "0.0.0.0";

  auto* compute = app.add_subcommand("compute", "invariants of one ribbon");
  compute->add_option("ribbon", ribbon_text)->required();
  compute->add_option("--kind", kind)->check(
      CLI::IsMember({"all", "gamma", "gamma0", "ext", "sad"}));
  compute->add_flag("--trace", trace);

  auto* oracle = app.add_subcommand("oracle", "enumerate packings");
  oracle->add_option("ribbon", ribbon_text)->required();
  oracle->add_flag("--count", count);
  oracle->add_flag("--by-size", by_size);
  oracle->add_flag("--emit-packings", emit);

  auto* iszero = app.add_subcommand("iszero", "decide gamma = 0 with a witness");
  iszero->add_option("ribbon", ribbon_text)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list canonical ribbons");
  enumerate->add_option("-n", n)->required();
  enumerate->add_flag("--positive", positive);
  enumerate->add_flag("--negative", negative);
  enumerate->add_option("--sigma", sigma);
  enumerate->add_flag("--with-gamma", with_gamma);

  auto* countc = app.add_subcommand("count", "closed-form counts");
  countc->add_option("-n", n)->required();
  countc->add_flag("--check", check, "compare with a streamed count");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required();
  verify->add_option("-n", n, "largest exhaustive n (suite default if omitted)");
  verify->add_option("--seed", seed);
  verify->add_option("--out", out, "JSON report path");

  auto* stats = app.add_subcommand("stats", "gamma distribution");
  stats->add_option("-n", n)->required();

  auto* serve = app.add_subcommand("serve", "HTTP JSON service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);

  auto* gsolve = app.add_subcommand("game-solve", "optimal-play winner");
  gsolve->add_option("-n", n)->required();
  gsolve->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    load_cache();
    int rc = 0;
    if (*compute) rc = cmd_compute(ribbon_text, kind, trace);
    else if (*oracle) rc = cmd_oracle(ribbon_text, count, by_size, emit);
    else if (*iszero) rc = cmd_iszero(ribbon_text);
    else if (*enumerate) rc = cmd_enumerate(n, positive, negative, sigma, with_gamma);
    else if (*countc) rc = cmd_count(n, check);
    else if (*verify) rc = cmd_verify(suite, n, seed, out);
    else if (*stats) rc = cmd_stats(n);
    else if (*gsolve) rc = cmd_game_solve(n, seed);
    else if (*serve) {
      Service svc;
      std::cerr << "listening on " << host << ":" << port << "\n";
      ribbon::serve(svc, host, port);
    }
    save_cache();
    return rc;
  } catch (const RibbonError& e) {
    std::cerr << "error: " << error_name(e.code) << ": " << e.what() << "\n";
  } catch (const GameError& e) {
    std::cerr << "error: " << e.code << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
