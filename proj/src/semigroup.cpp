#include "ribbonlab/semigroup.hpp"

#include <algorithm>
#include <set>

namespace ribbon {

bool sum_admissible(const Ribbon& a, const Ribbon& b, bool strict) {
  int amax = a.node_of_value(a.n()), bmin = b.node_of_value(1);
  if (a.marks[amax] < 0 || b.marks[bmin] < 0) return false;
  if (strict && (a.marks[a.node_of_value(1)] < 0 ||
                 b.marks[b.node_of_value(b.n())] < 0))
    return false;
  return true;
}

Ribbon connected_sum(const Ribbon& a, const Ribbon& b, bool strict) {
  if (!sum_admissible(a, b, strict))
    throw RibbonError(ErrorCode::PreconditionViolated,
                      "connected sum needs positive extreme nodes");
  const int na = a.n(), nb = b.n();
  int amax = a.node_of_value(na), bmin = b.node_of_value(1);
  std::vector<int> v, m;
  for (int i = 0; i < na; ++i) {
    if (i != amax) {
      v.push_back(a.values[i]);
      m.push_back(a.marks[i]);
      continue;
    }
    for (int k = 1; k < nb; ++k) {
      int j = (bmin + k) % nb;
      v.push_back(b.values[j] + na - 2);
      m.push_back(b.marks[j]);
    }
  }
  return new_ribbon(std::move(v), std::move(m));
}

namespace {

bool alternates(const std::vector<Rational>& lv, int i) {
  const int n = static_cast<int>(lv.size());
  const auto& a = lv[(i + n - 1) % n];
  const auto& c = lv[(i + 1) % n];
  return (lv[i] > a && lv[i] > c) || (lv[i] < a && lv[i] < c);
}

bool is_min_node(const std::vector<Rational>& lv, int i) {
  const int n = static_cast<int>(lv.size());
  return lv[i] < lv[(i + 1) % n];
}

void require_distinct(const std::vector<Rational>& lv) {
  std::set<Rational> s(lv.begin(), lv.end());
  if (s.size() != lv.size())
    throw RibbonError(ErrorCode::LevelCollision,
                      "glued ribbons share a level; perturb and retry");
}

// Cycle of m's nodes starting right after `skip`, translated by `shift`.
void append_after(const MarkedRibbon& m, int skip, const Rational& shift,
                  std::vector<Rational>& lv, std::vector<int>& mk,
                  std::vector<int>* map) {
  const int n = static_cast<int>(m.ribbon.levels.size());
  if (map) map->assign(n, -1);
  for (int k = 1; k < n; ++k) {
    int j = (skip + k) % n;
    if (map) (*map)[j] = static_cast<int>(lv.size());
    lv.push_back(m.ribbon.levels[j] + shift);
    mk.push_back(m.ribbon.marks[j]);
  }
}

}  // namespace

void validate_marked(const MarkedRibbon& m) {
  const auto& lv = m.ribbon.levels;
  const int n = static_cast<int>(lv.size());
  if (n < 2 || n % 2 || m.ribbon.marks.size() != lv.size())
    throw RibbonError(ErrorCode::OddLength, "marked ribbon needs even n >= 2");
  require_distinct(lv);
  for (int i = 0; i < n; ++i)
    if (!alternates(lv, i))
      throw RibbonError(ErrorCode::NotZigZag, "levels do not alternate");
  if (m.origin < 0 || m.origin >= n || m.end < 0 || m.end >= n ||
      !is_min_node(lv, m.origin) || is_min_node(lv, m.end) ||
      m.ribbon.marks[m.origin] != 1 || m.ribbon.marks[m.end] != 1)
    throw RibbonError(ErrorCode::PreconditionViolated,
                      "origin must be a positive minimum, end a positive maximum");
}

Ribbon discrete(const MarkedRibbon& m) { return from_levels(m.ribbon); }

MarkedRibbon mark_ends(const Ribbon& a, int origin, int end) {
  MarkedRibbon m;
  for (int v : a.values) m.ribbon.levels.emplace_back(v);
  m.ribbon.marks = a.marks;
  m.origin = origin;
  m.end = end;
  validate_marked(m);
  return m;
}

MarkedRibbon compose(const MarkedRibbon& a, const MarkedRibbon& b) {
  validate_marked(a);
  validate_marked(b);
  const int na = static_cast<int>(a.ribbon.levels.size());
  Rational shift = a.ribbon.levels[a.end] - b.ribbon.levels[b.origin];
  MarkedRibbon r;
  auto& lv = r.ribbon.levels;
  auto& mk = r.ribbon.marks;
  std::vector<int> bmap;
  for (int i = 0; i < na; ++i) {
    if (i == a.origin) r.origin = static_cast<int>(lv.size());
    if (i != a.end) {
      lv.push_back(a.ribbon.levels[i]);
      mk.push_back(a.ribbon.marks[i]);
      continue;
    }
    append_after(b, b.origin, shift, lv, mk, &bmap);
  }
  r.end = bmap[b.end];
  validate_marked(r);
  return r;
}

MarkedRibbon ternary_compose(const MarkedRibbon& a, const MarkedRibbon& b,
                             const MarkedRibbon& c) {
  validate_marked(a);
  validate_marked(b);
  validate_marked(c);
  const Rational l0 = a.ribbon.levels[a.end];
  Rational sb = l0 - b.ribbon.levels[b.end];
  Rational sc = l0 - c.ribbon.levels[c.origin];
  MarkedRibbon r;
  auto& lv = r.ribbon.levels;
  auto& mk = r.ribbon.marks;
  // new negative maximum, then a, c and b around the circle
  lv.push_back(l0);
  mk.push_back(-1);
  std::vector<int> amap, cmap;
  append_after(a, a.end, 0, lv, mk, &amap);
  append_after(c, c.origin, sc, lv, mk, &cmap);
  append_after(b, b.end, sb, lv, mk, nullptr);
  r.origin = amap[a.origin];
  r.end = cmap[c.end];
  validate_marked(r);
  return r;
}

MarkedRibbon marked_invert(const MarkedRibbon& a) {
  validate_marked(a);
  const int n = static_cast<int>(a.ribbon.levels.size());
  MarkedRibbon r;
  r.ribbon.levels.resize(n);
  r.ribbon.marks.resize(n);
  for (int i = 0; i < n; ++i) {
    r.ribbon.levels[i] = -a.ribbon.levels[n - 1 - i];
    r.ribbon.marks[i] = a.ribbon.marks[n - 1 - i];
  }
  r.origin = n - 1 - a.end;
  r.end = n - 1 - a.origin;
  return r;
}

}  // namespace ribbon
