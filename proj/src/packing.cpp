#include "ribbonlab/packing.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ribbon {

Weights element_weights(const CriticalElement& e) {
  switch (e.kind) {
    case ElementKind::IsoGon: {
      int k = static_cast<int>(e.arcs.size()) / 2;
      return {1, k - 1, 0, 1};
    }
    case ElementKind::IsoTriangle: return {0, 0, 0, 0};
    case ElementKind::ZeroGon: return {1, 1, 1, 0};
  }
  return {0, 0, 0, 0};
}

BoundaryPoints::BoundaryPoints(const Ribbon& a) : a_(&a) {
  const int n = a.n();
  base_.resize(n);
  for (int i = 0; i < n; ++i) {
    base_[i] = total_;
    node_at_.push_back(i);
    int lo = std::min(a.values[i], a.values[a.next(i)]);
    int hi = std::max(a.values[i], a.values[a.next(i)]);
    int slots = 2 * (hi - lo) - 1;
    node_at_.insert(node_at_.end(), slots, -1);
    total_ += 1 + slots;
  }
}

int BoundaryPoints::crossing(int arc, int tl) const {
  const Ribbon& a = *a_;
  int x = a.values[arc], y = a.values[a.next(arc)];
  int lo = std::min(x, y), hi = std::max(x, y);
  int along = x < y ? tl - 2 * lo - 1 : 2 * hi - 1 - tl;
  return base_[arc] + 1 + along;
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Number of nodes strictly inside each cyclic gap between consecutive points.
bool gaps_odd(const BoundaryPoints& bp, const std::vector<int>& pts) {
  const int m = static_cast<int>(pts.size());
  for (int k = 0; k < m; ++k) {
    int u = pts[k], w = pts[(k + 1) % m];
    int nodes = 0;
    for (int x = (u + 1) % bp.total(); x != w; x = (x + 1) % bp.total())
      if (bp.node_at(x) >= 0) ++nodes;
    if (nodes % 2 == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CriticalElement> enumerate_elements(const Ribbon& a) {
  BoundaryPoints bp(a);
  const int n = a.n();
  std::vector<CriticalElement> out;
  for (int p = 0; p < n; ++p) {
    if (a.marks[p] > 0) continue;
    CriticalElement z{ElementKind::ZeroGon, 2 * a.values[p], p, {}, {bp.node(p)}};
    out.push_back(z);
    auto cs = node_level_crossings(a, p);
    for (const auto& x : cs)
      for (const auto& y : cs) {
        if (!ternary_valid(a, p, x.arc, y.arc)) continue;
        int tl = 2 * a.values[p];
        CriticalElement t{ElementKind::IsoTriangle, tl, p, {x.arc, y.arc},
                          sorted({bp.node(p), bp.crossing(x.arc, tl),
                                  bp.crossing(y.arc, tl)})};
        out.push_back(t);
      }
  }
  for (int k = 1; k < n; ++k) {
    int tl = 2 * k + 1;
    auto cs = crossings_at(a, tl);
    const int m = static_cast<int>(cs.size());
    if (m < 4) continue;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      int c = std::popcount(mask);
      if (c < 4 || c % 2) continue;
      std::vector<int> idx;
      for (int b = 0; b < m; ++b)
        if (mask >> b & 1) idx.push_back(b);
      bool alt = true;
      for (int s = 0; s < c && alt; ++s)
        alt = cs[idx[s]].up != cs[idx[(s + 1) % c]].up;
      if (!alt) continue;
      CriticalElement g{ElementKind::IsoGon, tl, -1, {}, {}};
      for (int b : idx) {
        g.arcs.push_back(cs[b].arc);
        g.points.push_back(bp.crossing(cs[b].arc, tl));
      }
      g.points = sorted(g.points);
      out.push_back(g);
    }
  }
  return out;
}

bool odd_components(const Ribbon& a, const CriticalElement& e) {
  BoundaryPoints bp(a);
  return gaps_odd(bp, e.points);
}

PackingOracle::PackingOracle(const Ribbon& a)
    : a_(a), pts_(a_), elems_(enumerate_elements(a_)) {
  const int n = a_.n();
  std::vector<int> neg_slot(n, -1);
  for (int p = 0; p < n; ++p)
    if (a_.marks[p] < 0) {
      neg_slot[p] = static_cast<int>(anchor_options_.size());
      anchor_options_.emplace_back();
    }
  for (int e = 0; e < static_cast<int>(elems_.size()); ++e) {
    if (elems_[e].kind == ElementKind::IsoGon)
      isogons_.push_back(e);
    else
      anchor_options_[neg_slot[elems_[e].anchor]].push_back(e);
  }
  const int E = static_cast<int>(elems_.size());
  const int words = (E + 63) / 64;
  compat_.assign(E, std::vector<std::uint64_t>(words, 0));
  for (int x = 0; x < E; ++x)
    for (int y = 0; y < E; ++y)
      if (x != y && compatible(x, y)) compat_[x][y / 64] |= 1ull << (y % 64);
  positive_prefix_.assign(pts_.total() + 1, 0);
  for (int x = 0; x < pts_.total(); ++x) {
    int node = pts_.node_at(x);
    positive_prefix_[x + 1] =
        positive_prefix_[x] + (node >= 0 && a_.marks[node] > 0 ? 1 : 0);
  }
  total_positive_ = positive_prefix_[pts_.total()];
}

// Disjoint, and y's points all fall in one gap of x.
bool PackingOracle::compatible(int x, int y) const {
  const auto& px = elems_[x].points;
  const auto& py = elems_[y].points;
  int gap = -1;
  for (int q : py) {
    auto it = std::lower_bound(px.begin(), px.end(), q);
    if (it != px.end() && *it == q) return false;
    int g = static_cast<int>(it - px.begin()) % static_cast<int>(px.size());
    if (gap >= 0 && g != gap) return false;
    gap = g;
  }
  return true;
}

int PackingOracle::positives_between(int u, int w) const {
  const auto& pp = positive_prefix_;
  if (u == w) {
    int node = pts_.node_at(u);
    return total_positive_ - (node >= 0 && a_.marks[node] > 0 ? 1 : 0);
  }
  if (u < w) return pp[w] - pp[u + 1];
  return (pp[pts_.total()] - pp[u + 1]) + pp[w];
}

void PackingOracle::for_each(const std::function<bool(const Packing&)>& f) const {
  const int E = static_cast<int>(elems_.size());
  const int words = (E + 63) / 64;
  const int P = pts_.total();
  std::vector<std::uint64_t> iso_mask(words, 0);
  for (int e : isogons_) iso_mask[e / 64] |= 1ull << (e % 64);

  Packing cur;
  bool stop = false;
  std::vector<std::uint64_t> all(words, ~0ull);

  // Faces of the arrangement are walked segment by segment: after reaching a
  // point of element E the face continues from E's previous point. A face is
  // regular iff its positive nodes plus its element contacts number exactly
  // two (its own ribbon is then alpha_0). Returns the segments of the first
  // irregular face; `valid` is set when there is none.
  using Segment = std::pair<int, int>;
  auto violation = [&](const std::vector<int>& chosen,
                       bool& valid) -> std::vector<Segment> {
    valid = false;
    if (chosen.empty()) {
      valid = total_positive_ == 2;
      return {{-1, -1}};
    }
    std::vector<std::pair<int, int>> pts;
    for (int e : chosen)
      for (int q : elems_[e].points) pts.push_back({q, e});
    std::sort(pts.begin(), pts.end());
    const int m = static_cast<int>(pts.size());
    auto global = [&](int q) {
      return static_cast<int>(
          std::lower_bound(pts.begin(), pts.end(), std::make_pair(q, -1)) -
          pts.begin());
    };
    auto pred = [&](int k) {
      const auto& ep = elems_[pts[k].second].points;
      int i = static_cast<int>(
          std::lower_bound(ep.begin(), ep.end(), pts[k].first) - ep.begin());
      int len = static_cast<int>(ep.size());
      return global(ep[(i + len - 1) % len]);
    };
    std::vector<char> seen(m, 0);
    for (int k = 0; k < m; ++k) {
      if (seen[k]) continue;
      std::vector<Segment> face;
      int positive = 0;
      int s = k;
      do {
        seen[s] = 1;
        int t = (s + 1) % m;
        face.push_back({pts[s].first, pts[t].first});
        positive += positives_between(pts[s].first, pts[t].first);
        s = pred(t);
      } while (s != k);
      if (positive + static_cast<int>(face.size()) != 2) return face;
    }
    valid = true;
    return {};
  };

  auto inside = [&](int e, const std::vector<Segment>& face) {
    for (auto [u, w] : face) {
      if (u < 0) return true;
      int span = u == w ? P : (w - u + P) % P;
      for (int q : elems_[e].points) {
        int d = (q - u + P) % P;
        if (d > 0 && d < span) return true;
      }
    }
    return false;
  };

  std::function<void(std::vector<std::uint64_t>)> iso_search =
      [&](std::vector<std::uint64_t> allowed) {
        if (stop) return;
        bool valid;
        auto face = violation(cur.elements, valid);
        if (valid && !f(cur)) {
          stop = true;
          return;
        }
        std::vector<int> cand;
        for (int e : isogons_)
          if ((allowed[e / 64] >> (e % 64) & 1) && (valid || inside(e, face)))
            cand.push_back(e);
        for (int e : cand) {
          std::vector<std::uint64_t> next(words);
          for (int k = 0; k < words; ++k) next[k] = allowed[k] & compat_[e][k];
          cur.elements.push_back(e);
          iso_search(next);
          cur.elements.pop_back();
          if (stop) return;
          allowed[e / 64] &= ~(1ull << (e % 64));
        }
      };

  std::function<void(std::size_t, std::vector<std::uint64_t>)> anchor_search =
      [&](std::size_t r, std::vector<std::uint64_t> allowed) {
        if (stop) return;
        if (r == anchor_options_.size()) {
          for (int k = 0; k < words; ++k) allowed[k] &= iso_mask[k];
          iso_search(allowed);
          return;
        }
        for (int e : anchor_options_[r]) {
          if (!(allowed[e / 64] >> (e % 64) & 1)) continue;
          std::vector<std::uint64_t> next(words);
          for (int k = 0; k < words; ++k) next[k] = allowed[k] & compat_[e][k];
          cur.elements.push_back(e);
          anchor_search(r + 1, next);
          cur.elements.pop_back();
          if (stop) return;
        }
      };

  anchor_search(0, all);
}

bool PackingOracle::is_packing(const std::vector<int>& ids) const {
  const int P = pts_.total();
  std::vector<int> owner(P, -1);
  for (int e : ids)
    for (int q : elems_[e].points) {
      if (owner[q] >= 0) return false;
      owner[q] = e;
    }
  // non-interleaving: the cyclic label sequence of any two elements has at
  // most two blocks
  for (std::size_t s = 0; s < ids.size(); ++s)
    for (std::size_t t = s + 1; t < ids.size(); ++t) {
      std::vector<int> seq;
      for (int x = 0; x < P; ++x)
        if (owner[x] == ids[s] || owner[x] == ids[t]) seq.push_back(owner[x]);
      int changes = 0;
      for (std::size_t k = 0; k < seq.size(); ++k)
        if (seq[k] != seq[(k + 1) % seq.size()]) ++changes;
      if (changes > 2) return false;
    }
  for (int p = 0; p < a_.n(); ++p) {
    int anchored = 0;
    for (int e : ids)
      if (elems_[e].anchor == p) ++anchored;
    if ((a_.marks[p] < 0) != (anchored == 1) || anchored > 1) return false;
  }
  auto positive_at = [&](int x) {
    int node = pts_.node_at(x);
    return node >= 0 && a_.marks[node] > 0;
  };
  std::vector<int> owned;
  for (int x = 0; x < P; ++x)
    if (owner[x] >= 0) owned.push_back(x);
  if (owned.empty()) {
    int pos = 0;
    for (int x = 0; x < P; ++x) pos += positive_at(x);
    return pos == 2;
  }
  std::vector<char> used(P, 0);
  for (int start : owned) {
    if (used[start]) continue;
    int x = start, contacts = 0, pos = 0;
    do {
      used[x] = 1;
      int y = (x + 1) % P;
      for (; owner[y] < 0; y = (y + 1) % P) pos += positive_at(y);
      ++contacts;
      // back along the circle to the previous point of y's element
      int z = (y + P - 1) % P;
      while (owner[z] != owner[y]) z = (z + P - 1) % P;
      x = z;
    } while (x != start);
    if (pos + contacts != 2) return false;
  }
  return true;
}

Weights PackingOracle::weights_of(const Packing& p) const {
  Weights w{0, 0, 0, 0};
  for (int e : p.elements) {
    Weights d = element_weights(elems_[e]);
    for (int k = 0; k < 4; ++k) w[k] += d[k];
  }
  return w;
}

OracleSummary PackingOracle::summarize() const {
  OracleSummary s;
  const int inf = std::numeric_limits<int>::max();
  s.minimum.fill(inf);
  s.min_levels = inf;
  s.min_nondeg_saddles = inf;
  std::vector<Weights> all;
  for_each([&](const Packing& p) {
    Weights w = weights_of(p);
    all.push_back(w);
    ++s.packings;
    ++s.by_size[w[0]];
    for (int k = 0; k < 4; ++k) s.minimum[k] = std::min(s.minimum[k], w[k]);
    int comp = 0, nondeg = 0;
    std::set<int> levels;
    for (int e : p.elements) {
      const auto& el = elems_[e];
      if (element_weights(el)[0] > 0) levels.insert(el.twice_level);  // 0-gons are not critical
      if (el.kind != ElementKind::IsoGon) continue;
      int k = static_cast<int>(el.arcs.size()) / 2;
      comp += k - 2;
      nondeg += k - 1;
    }
    s.compression = std::max(s.compression, comp);
    s.max_nondeg_saddles = std::max(s.max_nondeg_saddles, nondeg);
    s.min_nondeg_saddles = std::min(s.min_nondeg_saddles, nondeg);
    s.min_levels = std::min(s.min_levels, static_cast<int>(levels.size()));
    s.max_gamma_weight = std::max(s.max_gamma_weight, w[0]);
    return true;
  });
  for (const auto& w : all)
    for (int k = 0; k < 4; ++k)
      if (w[k] == s.minimum[k]) ++s.minimal[k];
  return s;
}

std::string PackingOracle::packing_json(const Packing& p) const {
  nlohmann::json els = nlohmann::json::array();
  for (int e : p.elements) {
    const auto& el = elems_[e];
    nlohmann::json j;
    switch (el.kind) {
      case ElementKind::IsoGon:
        j["kind"] = "isogon";
        j["level"] = el.twice_level / 2.0;
        j["arcs"] = el.arcs;
        break;
      case ElementKind::IsoTriangle:
        j["kind"] = "isotriangle";
        j["level"] = el.twice_level / 2;
        j["node"] = el.anchor;
        j["arcs"] = el.arcs;
        break;
      case ElementKind::ZeroGon:
        j["kind"] = "zerogon";
        j["node"] = el.anchor;
        break;
    }
    els.push_back(j);
  }
  return nlohmann::json{{"elements", els}}.dump();
}

int oracle_invariant(const Ribbon& a, Kind k) {
  return PackingOracle(a).summarize().minimum[static_cast<int>(k)];
}

std::uint64_t count_packings(const Ribbon& a) {
  return PackingOracle(a).summarize().packings;
}

std::map<int, std::uint64_t> count_by_size(const Ribbon& a) {
  return PackingOracle(a).summarize().by_size;
}

std::uint64_t count_minimal(const Ribbon& a, Kind k) {
  return PackingOracle(a).summarize().minimal[static_cast<int>(k)];
}

int compression(const Ribbon& a) {
  return PackingOracle(a).summarize().compression;
}

int max_nondeg_saddles(const Ribbon& a) {
  return PackingOracle(a).summarize().max_nondeg_saddles;
}

int min_nondeg_saddles(const Ribbon& a) {
  return PackingOracle(a).summarize().min_nondeg_saddles;
}

std::uint64_t count_free_extensions(const std::vector<int>& perm) {
  Ribbon a = new_ribbon(perm, std::vector<int>(perm.size(), -1));
  return count_minimal(a, Kind::Gamma);
}

}  // namespace ribbon
