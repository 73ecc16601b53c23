#include "ribbonlab/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "ribbonlab/solver.hpp"

namespace ribbon {

std::vector<BigInt> tangent_numbers(int up_to) {
  // Seidel triangle: T(k,0)=0 (k>0), T(k,j) = T(k,j-1) + T(k-1,k-j).
  std::vector<BigInt> out{1};
  std::vector<BigInt> prev{1};
  for (int k = 1; k <= up_to; ++k) {
    std::vector<BigInt> row(k + 1);
    row[0] = 0;
    for (int j = 1; j <= k; ++j) row[j] = row[j - 1] + prev[k - j];
    out.push_back(row[k]);
    prev = std::move(row);
  }
  return out;
}

BigInt euler_number(int k) { return tangent_numbers(k)[k]; }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

static void check_n(int n, int max_n) {
  if (n < 2 || n % 2)
    throw RibbonError(ErrorCode::OddLength, "n must be even and >= 2");
  if (n > max_n)
    throw RibbonError(ErrorCode::LimitExceeded,
                      "n=" + std::to_string(n) + " exceeds limit " +
                          std::to_string(max_n));
}

namespace {
struct ZigzagGen {
  int n;
  const std::function<void(const std::vector<int>&)>& f;
  std::vector<int> cur;
  std::vector<char> used;
  void rec(int i) {
    if (i == n) {
      f(cur);
      return;
    }
    // odd positions are maxima (above the previous value)
    for (int v = 2; v <= n; ++v) {
      if (used[v]) continue;
      if (i % 2 == 1 ? v < cur[i - 1] : v > cur[i - 1]) continue;
      used[v] = 1;
      cur[i] = v;
      rec(i + 1);
      used[v] = 0;
    }
  }
};
}  // namespace

void for_each_zigzag(int n, const std::function<void(const std::vector<int>&)>& f,
                     int max_n) {
  check_n(n, max_n);
  ZigzagGen g{n, f, std::vector<int>(n, 0), std::vector<char>(n + 1, 0)};
  g.cur[0] = 1;
  g.used[1] = 1;
  g.rec(1);
}

std::vector<std::vector<int>> zigzag_perms(int n, int max_n) {
  std::vector<std::vector<int>> out;
  for_each_zigzag(n, [&](const std::vector<int>& p) { out.push_back(p); }, max_n);
  return out;
}

void for_each_ribbon(int n, const RibbonFilter& filter,
                     const std::function<void(const Ribbon&)>& f, int max_n) {
  check_n(n, max_n);
  if (filter.mode == RibbonFilter::Sigma &&
      (filter.sigma % 2 || filter.sigma < -n || filter.sigma > n))
    throw RibbonError(ErrorCode::InfeasibleSigma, "infeasible sigma");
  for_each_zigzag(
      n,
      [&](const std::vector<int>& perm) {
        Ribbon r;
        r.values = perm;
        r.marks.assign(n, 1);
        auto emit = [&] {
          if (!filter.predicate || filter.predicate(r)) f(r);
        };
        if (filter.mode == RibbonFilter::Positive) return emit();
        if (filter.mode == RibbonFilter::Negative) {
          r.marks.assign(n, -1);
          return emit();
        }
        // '+' sorts before '-', index 0 most significant
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
          int neg = 0;
          for (int i = 0; i < n; ++i) {
            bool minus = (m >> (n - 1 - i)) & 1u;
            r.marks[i] = minus ? -1 : 1;
            neg += minus;
          }
          if (filter.mode == RibbonFilter::Sigma && n - 2 * neg != filter.sigma)
            continue;
          emit();
        }
      },
      max_n);
}

std::vector<Ribbon> ribbons(int n, const RibbonFilter& filter, int max_n) {
  std::vector<Ribbon> out;
  for_each_ribbon(n, filter, [&](const Ribbon& r) { out.push_back(r); }, max_n);
  return out;
}

std::vector<Ribbon> ribbons_up_to(int n_max) {
  std::vector<Ribbon> out;
  for (int n = 2; n <= n_max; n += 2) {
    auto part = ribbons(n, {}, std::max(n_max, kDefaultMaxN));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

CountRow count_ribbons(int n) {
  if (n < 2 || n % 2) throw RibbonError(ErrorCode::OddLength, "n must be even");
  CountRow row;
  row.n = n;
  row.zigzag = euler_number(n - 1);
  row.positive = row.zigzag;
  row.ribbons = row.zigzag << n;
  for (int s = -n; s <= n; s += 2)
    row.per_sigma[s] = binomial(n, (n + s) / 2) * row.zigzag;
  return row;
}

BigInt alternation_count(int n) {
  if (n < 4 || n % 2) return 0;
  return factorial(n / 2) * factorial(n / 2 - 1);
}

BigInt ladder_shape_count(int n) {
  if (n < 4 || n % 2) return 0;
  return BigInt(1) << (n / 2 - 1);
}

BigInt general_ladder_count(int n) {
  if (n < 4 || n % 2) return 0;
  return BigInt(1) << (3 * n / 2 - 1);
}

std::vector<int> random_zigzag(int n, std::mt19937_64& rng) {
  if (n < 2 || n % 2) throw RibbonError(ErrorCode::OddLength, "n must be even");
  if (n > 16) throw RibbonError(ErrorCode::LimitExceeded, "n > 16");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (;;) {
    std::shuffle(v.begin() + 1, v.end(), rng);
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      ok = i % 2 == 1 ? v[i] > v[i - 1] : v[i] < v[i - 1];
    if (ok) return v;
  }
}

Ribbon random_ribbon(int n, std::optional<int> sigma, std::mt19937_64& rng) {
  if (sigma && (*sigma % 2 || *sigma < -n || *sigma > n))
    throw RibbonError(ErrorCode::InfeasibleSigma, "infeasible sigma");
  Ribbon r;
  r.values = random_zigzag(n, rng);
  r.marks.assign(n, 1);
  if (sigma) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < (n - *sigma) / 2; ++i) r.marks[idx[i]] = -1;
  } else {
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& m : r.marks) m = coin(rng) ? 1 : -1;
  }
  return r;
}

Ribbon random_ribbon(int n, std::optional<int> sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_ribbon(n, sigma, rng);
}

std::map<int, std::uint64_t> gamma_distribution(int n) {
  std::map<int, std::uint64_t> h;
  auto& s = default_solver();
  for_each_ribbon(n, {}, [&](const Ribbon& r) { ++h[s.invariant(r, Kind::Gamma)]; });
  return h;
}

std::set<std::pair<int, int>> realizable_pairs(int n) {
  std::set<std::pair<int, int>> out;
  auto& s = default_solver();
  for_each_ribbon(n, {}, [&](const Ribbon& r) {
    out.emplace(signature(r), s.invariant(r, Kind::Gamma));
  });
  return out;
}

}  // namespace ribbon
