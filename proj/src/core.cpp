#include "ribbonlab/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace ribbon {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::NotZigZag: return "NotZigZag";
    case ErrorCode::BadMark: return "BadMark";
    case ErrorCode::DuplicateLevel: return "DuplicateLevel";
    case ErrorCode::NotCancellable: return "NotCancellable";
    case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LevelCollision: return "LevelCollision";
    case ErrorCode::NotCanonicalLadder: return "NotCanonicalLadder";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InfeasibleSigma: return "InfeasibleSigma";
    case ErrorCode::InternalNoCandidate: return "InternalNoCandidate";
  }
  return "Unknown";
}

int Ribbon::node_of_value(int v) const {
  for (int i = 0; i < n(); ++i)
    if (values[i] == v) return i;
  return -1;
}

void validate(const std::vector<int>& values, const std::vector<int>& marks) {
  const int n = static_cast<int>(values.size());
  if (marks.size() != values.size())
    throw RibbonError(ErrorCode::BadMark, "values and marks differ in length");
  if (n < 2 || n % 2)
    throw RibbonError(ErrorCode::OddLength,
                      "node count must be even and at least 2");
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[v])
      throw RibbonError(ErrorCode::NotPermutation,
                        "values must be a permutation of 1..n");
    seen[v] = 1;
  }
  for (int m : marks)
    if (m != 1 && m != -1)
      throw RibbonError(ErrorCode::BadMark, "marks must be +1 or -1");
  for (int i = 0; i < n; ++i) {
    int a = values[(i + n - 1) % n], b = values[i], c = values[(i + 1) % n];
    bool mx = b > a && b > c, mn = b < a && b < c;
    if (!mx && !mn)
      throw RibbonError(ErrorCode::NotZigZag,
                        "values do not alternate around the cycle");
  }
}

Ribbon canonicalize(const Ribbon& a) {
  int s = a.node_of_value(1);
  if (s <= 0) return a;
  Ribbon r;
  r.values.resize(a.n());
  r.marks.resize(a.n());
  for (int i = 0; i < a.n(); ++i) {
    r.values[i] = a.values[(s + i) % a.n()];
    r.marks[i] = a.marks[(s + i) % a.n()];
  }
  return r;
}

Ribbon new_ribbon(std::vector<int> values, std::vector<int> marks) {
  validate(values, marks);
  return canonicalize(Ribbon{std::move(values), std::move(marks)});
}

Ribbon relabel(const std::vector<int>& levels, const std::vector<int>& marks) {
  const int n = static_cast<int>(levels.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return levels[x] < levels[y]; });
  Ribbon r{std::vector<int>(n), marks};
  for (int k = 0; k < n; ++k) r.values[order[k]] = k + 1;
  return canonicalize(r);
}

Ribbon from_levels(const RigidRibbon& rr) {
  const int n = static_cast<int>(rr.levels.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return rr.levels[x] < rr.levels[y]; });
  for (int k = 1; k < n; ++k)
    if (rr.levels[order[k]] == rr.levels[order[k - 1]])
      throw RibbonError(ErrorCode::DuplicateLevel, "levels must be distinct");
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[order[k]] = k + 1;
  return new_ribbon(std::move(v), rr.marks);
}

Ribbon alpha0() { return Ribbon{{1, 2}, {1, 1}}; }

int positives(const Ribbon& a) {
  return static_cast<int>(std::count(a.marks.begin(), a.marks.end(), 1));
}

int signature(const Ribbon& a) { return 2 * positives(a) - a.n(); }

int index_of(const Ribbon& a) { return 1 - signature(a) / 2; }

std::strong_ordering lex_compare(const Ribbon& a, const Ribbon& b) {
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  if (auto c = a.values <=> b.values; c != 0) return c;
  // +1 precedes -1
  for (int i = 0; i < a.n(); ++i)
    if (a.marks[i] != b.marks[i])
      return a.marks[i] > b.marks[i] ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ribbon mark_flip_all(const Ribbon& a) {
  Ribbon r = a;
  for (int& m : r.marks) m = -m;
  return r;
}

Ribbon invert(const Ribbon& a) {
  const int n = a.n();
  Ribbon r{std::vector<int>(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    r.values[i] = n + 1 - a.values[n - 1 - i];
    r.marks[i] = a.marks[n - 1 - i];
  }
  return canonicalize(r);
}

Ribbon with_mark(const Ribbon& a, int node, int mark) {
  Ribbon r = a;
  r.marks[node] = mark;
  return r;
}

std::vector<Crossing> crossings_at(const Ribbon& a, int twice_level) {
  std::vector<Crossing> out;
  for (int i = 0; i < a.n(); ++i) {
    int x = 2 * a.values[i], y = 2 * a.values[a.next(i)];
    if (std::min(x, y) < twice_level && twice_level < std::max(x, y))
      out.push_back({i, x < y});
  }
  return out;
}

std::vector<Crossing> crossings(const Ribbon& a, int k) {
  return crossings_at(a, 2 * k + 1);
}

std::vector<Crossing> node_level_crossings(const Ribbon& a, int p) {
  return crossings_at(a, 2 * a.values[p]);
}

int crossing_count(const Ribbon& a, int twice_level) {
  int c = 0;
  for (int i = 0; i < a.n(); ++i) {
    int x = 2 * a.values[i], y = 2 * a.values[a.next(i)];
    if (std::min(x, y) < twice_level && twice_level < std::max(x, y)) ++c;
  }
  return c;
}

Ribbon remove_pair(const Ribbon& a, int p, int q) {
  std::vector<int> lv, mk;
  for (int i = 0; i < a.n(); ++i) {
    if (i == p || i == q) continue;
    lv.push_back(a.values[i]);
    mk.push_back(a.marks[i]);
  }
  return relabel(lv, mk);
}

std::vector<NodePair> short_cancellable_pairs(const Ribbon& a) {
  std::vector<NodePair> out;
  if (a.n() < 4) return out;
  for (int i = 0; i < a.n(); ++i) {
    int j = a.next(i);
    if (a.marks[i] != a.marks[j] && std::abs(a.values[i] - a.values[j]) == 1)
      out.push_back({i, j});
  }
  return out;
}

Ribbon short_cancel_all(const Ribbon& a) {
  Ribbon r = a;
  while (r.n() >= 4) {
    auto pairs = short_cancellable_pairs(r);
    if (pairs.empty()) break;
    r = remove_pair(r, pairs[0].p, pairs[0].q);
  }
  return r;
}

bool is_cancellable(const Ribbon& a, int p, int q) {
  const int n = a.n();
  if (n < 4 || p < 0 || q < 0 || p >= n || q >= n) return false;
  if (a.marks[p] != -1 || a.marks[q] != 1) return false;
  int r;
  if (a.next(p) == q)
    r = a.next(q);
  else if (a.prev(p) == q)
    r = a.prev(q);
  else
    return false;
  return std::abs(a.values[p] - a.values[q]) <
         std::abs(a.values[q] - a.values[r]);
}

std::vector<NodePair> cancellable_pairs(const Ribbon& a) {
  std::vector<NodePair> out;
  for (int p = 0; p < a.n(); ++p) {
    if (a.marks[p] != -1) continue;
    for (int q : {a.prev(p), a.next(p)})
      if (is_cancellable(a, p, q)) out.push_back({p, q});
  }
  return out;
}

Ribbon cancel(const Ribbon& a, int p, int q) {
  if (!is_cancellable(a, p, q))
    throw RibbonError(ErrorCode::NotCancellable, "pair is not cancellable");
  return remove_pair(a, p, q);
}

bool is_positive(const Ribbon& a) {
  return std::all_of(a.marks.begin(), a.marks.end(),
                     [](int m) { return m == 1; });
}

bool is_negative(const Ribbon& a) {
  return std::all_of(a.marks.begin(), a.marks.end(),
                     [](int m) { return m == -1; });
}

bool is_ladder(const Ribbon& a) {
  if (a.n() < 4) return false;
  for (int k = 1; k < a.n(); ++k)
    if (crossing_count(a, 2 * k + 1) > 4) return false;
  return true;
}

bool is_alternation(const Ribbon& a) {
  if (a.n() < 4 || !is_positive(a)) return false;
  for (int i = 0; i < a.n(); ++i)
    if (a.is_min(i) != (a.values[i] <= a.n() / 2)) return false;
  return true;
}

std::string to_string(const Ribbon& a) {
  std::string s = "(";
  for (int i = 0; i < a.n(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.values[i]);
    s += a.marks[i] > 0 ? '+' : '-';
  }
  return s + ")";
}

Ribbon parse_ribbon(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw RibbonError(ErrorCode::ParseError, "expected (v1s1,v2s2,...)");
  std::vector<int> v, m;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2)
      throw RibbonError(ErrorCode::ParseError, "bad node '" + item + "'");
    char sign = item.back();
    std::string digits = item.substr(0, item.size() - 1);
    if ((sign != '+' && sign != '-') || digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw RibbonError(ErrorCode::ParseError, "bad node '" + item + "'");
    v.push_back(std::stoi(digits));
    m.push_back(sign == '+' ? 1 : -1);
  }
  if (!t.empty() && t[t.size() - 2] == ',')
    throw RibbonError(ErrorCode::ParseError, "trailing comma");
  return new_ribbon(std::move(v), std::move(m));
}

Ribbon parse_any(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      auto j = nlohmann::json::parse(text);
      return new_ribbon(j.at("values").get<std::vector<int>>(),
                        j.at("marks").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
      throw RibbonError(ErrorCode::ParseError, e.what());
    }
  }
  return parse_ribbon(text);
}

RibbonKey key_of(const Ribbon& a) {
  RibbonKey k;
  k.n = static_cast<std::uint32_t>(a.n());
  for (int i = 0; i < a.n(); ++i) {
    k.values |= std::uint64_t(a.values[i] - 1) << (4 * i);
    if (a.marks[i] < 0) k.marks |= 1u << i;
  }
  return k;
}

void validate_profile(const WeakProfile& w) {
  const int n = static_cast<int>(w.levels.size());
  if (n < 2 || n % 2)
    throw RibbonError(ErrorCode::OddLength, "profile length must be even");
  for (int i = 0; i < n; ++i) {
    const auto& a = w.levels[(i + n - 1) % n];
    const auto& b = w.levels[i];
    const auto& c = w.levels[(i + 1) % n];
    if (b == a || b == c)
      throw RibbonError(ErrorCode::DuplicateLevel, "adjacent levels coincide");
    if (!((b > a && b > c) || (b < a && b < c)))
      throw RibbonError(ErrorCode::NotZigZag, "profile does not alternate");
  }
}

std::pair<int, int> profile_counts(const WeakProfile& w) {
  validate_profile(w);
  auto [lo, hi] = std::minmax_element(w.levels.begin(), w.levels.end());
  int s = 0;
  for (const auto& x : w.levels) s += (x == *lo) + (x == *hi);
  return {static_cast<int>(w.levels.size()), s};
}

bool is_rolle(const WeakProfile& w) {
  auto [n, s] = profile_counts(w);
  return 2 * s > n + 2;
}

}  // namespace ribbon
