#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ribbonlab/core.hpp"

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;

// Euler up/down numbers A_0..A_N (boustrophedon).
std::vector<BigInt> tangent_numbers(int up_to);
BigInt euler_number(int k);
BigInt binomial(int n, int k);
BigInt factorial(int n);

constexpr int kDefaultMaxN = 10;

// Canonical cyclic zig-zag permutations (value 1 first), lex order.
void for_each_zigzag(int n, const std::function<void(const std::vector<int>&)>& f,
                     int max_n = kDefaultMaxN);
std::vector<std::vector<int>> zigzag_perms(int n, int max_n = kDefaultMaxN);

struct RibbonFilter {
  enum Mode { All, Positive, Negative, Sigma } mode = All;
  int sigma = 0;
  std::function<bool(const Ribbon&)> predicate;
};

// Every canonical ribbon with n nodes passing the filter, lex order.
void for_each_ribbon(int n, const RibbonFilter& filter,
                     const std::function<void(const Ribbon&)>& f,
                     int max_n = kDefaultMaxN);
std::vector<Ribbon> ribbons(int n, const RibbonFilter& filter = {},
                            int max_n = kDefaultMaxN);
// Lex order across sizes 2, 4, ..., n_max.
std::vector<Ribbon> ribbons_up_to(int n_max);

struct CountRow {
  int n = 0;
  BigInt zigzag, ribbons, positive;
  std::map<int, BigInt> per_sigma;
};
CountRow count_ribbons(int n);
BigInt alternation_count(int n);
BigInt ladder_shape_count(int n);
BigInt general_ladder_count(int n);

std::vector<int> random_zigzag(int n, std::mt19937_64& rng);
Ribbon random_ribbon(int n, std::optional<int> sigma, std::uint64_t seed);
Ribbon random_ribbon(int n, std::optional<int> sigma, std::mt19937_64& rng);

// gamma -> count over all ribbons with n nodes.
std::map<int, std::uint64_t> gamma_distribution(int n);
std::set<std::pair<int, int>> realizable_pairs(int n);

}  // namespace ribbon
