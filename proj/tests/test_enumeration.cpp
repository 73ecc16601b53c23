#include <cmath>

#include "doctest.h"
#include "ribbonlab/enumeration.hpp"
#include "ribbonlab/solver.hpp"

using namespace ribbon;

TEST_CASE("tangent numbers") {
  auto a = tangent_numbers(11);
  std::vector<int> want{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792};
  for (int k = 0; k <= 11; ++k) CHECK(a[k] == want[k]);
  CHECK(euler_number(9) == 7936);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(6) == 720);
}

TEST_CASE("zigzag enumeration matches counts") {
  for (int n = 2; n <= 8; n += 2) {
    auto ps = zigzag_perms(n);
    CHECK(BigInt(ps.size()) == euler_number(n - 1));
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
    CountRow row = count_ribbons(n);
    CHECK(row.ribbons == BigInt(ps.size()) << n);
  }
  CHECK(ribbons(4).size() == 32);
  CHECK(ribbons(2).front() == alpha0());
  CHECK_THROWS(zigzag_perms(12));
}

TEST_CASE("filters") {
  RibbonFilter pos;
  pos.mode = RibbonFilter::Positive;
  auto p = ribbons(6, pos);
  CHECK(p.size() == 16);
  for (const auto& r : p) CHECK(is_positive(r));
  RibbonFilter s;
  s.mode = RibbonFilter::Sigma;
  s.sigma = 2;
  std::size_t total = 0;
  for (const auto& r : ribbons(6, s)) {
    CHECK(signature(r) == 2);
    ++total;
  }
  CHECK(BigInt(total) == count_ribbons(6).per_sigma.at(2));
}

TEST_CASE("shape counts") {
  CHECK(ladder_shape_count(8) == 8);
  CHECK(alternation_count(6) == 12);
  CHECK(general_ladder_count(4) == 32);
}

TEST_CASE("sampling is deterministic and respects sigma") {
  CHECK(random_ribbon(10, std::nullopt, 7) == random_ribbon(10, std::nullopt, 7));
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(signature(random_ribbon(8, 4, s)) == 4);
  CHECK_THROWS(random_ribbon(4, 10, 1));
}

TEST_CASE("uniform zigzag sampling") {
  // chi-square over the 16 zig-zags with 6 nodes
  auto ps = zigzag_perms(6);
  std::map<std::vector<int>, int> hist;
  std::mt19937_64 rng(11);
  const int draws = 16000;
  for (int i = 0; i < draws; ++i) hist[random_zigzag(6, rng)]++;
  CHECK(hist.size() == ps.size());
  double chi = 0, e = static_cast<double>(draws) / ps.size();
  for (auto& [k, v] : hist) chi += (v - e) * (v - e) / e;
  CHECK(chi < 40.0);  // 15 dof, far beyond p = 0.001
}

TEST_CASE("gamma statistics") {
  auto d = gamma_distribution(4);
  std::uint64_t tot = 0;
  for (auto [g, c] : d) tot += c;
  CHECK(tot == 32);
  auto pairs = realizable_pairs(4);
  CHECK(pairs.count({2, 0}) == 1);
}
