#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ribbonlab/core.hpp"
#include "ribbonlab/solver.hpp"

namespace ribbon {

enum class ElementKind { IsoGon, IsoTriangle, ZeroGon };

struct CriticalElement {
  ElementKind kind;
  int twice_level = 0;      // doubled level (odd for iso-gons)
  int anchor = -1;          // negative node (triangles, 0-gons)
  std::vector<int> arcs;    // vertex arcs in circle order
  std::vector<int> points;  // boundary positions, sorted
};

Weights element_weights(const CriticalElement& e);

// Boundary points in circular order: each node, followed by the crossings of
// its outgoing arc sorted along the arc.
class BoundaryPoints {
 public:
  explicit BoundaryPoints(const Ribbon& a);
  int node(int i) const { return base_[i]; }
  int crossing(int arc, int twice_level) const;
  int total() const { return total_; }
  // node index at position, or -1 for a crossing
  int node_at(int pos) const { return node_at_[pos]; }

 private:
  const Ribbon* a_;
  std::vector<int> base_, node_at_;
  int total_ = 0;
};

struct Packing {
  std::vector<int> elements;  // indices into the oracle's element list
};

struct OracleSummary {
  Weights minimum{0, 0, 0, 0};
  std::uint64_t packings = 0;
  std::map<int, std::uint64_t> by_size;   // Gamma weight -> count
  std::array<std::uint64_t, 4> minimal{0, 0, 0, 0};
  int compression = 0;
  int max_nondeg_saddles = 0;
  int min_nondeg_saddles = 0;  // after morsifying every iso-gon
  int min_levels = 0;
  int max_gamma_weight = 0;
};

class PackingOracle {
 public:
  explicit PackingOracle(const Ribbon& a);

  const Ribbon& ribbon() const { return a_; }
  const std::vector<CriticalElement>& elements() const { return elems_; }
  // Stops early if the callback returns false.
  void for_each(const std::function<bool(const Packing&)>& f) const;
  OracleSummary summarize() const;
  // Independent re-check of packing conditions.
  bool is_packing(const std::vector<int>& ids) const;
  Weights weights_of(const Packing& p) const;
  std::string packing_json(const Packing& p) const;

 private:
  Ribbon a_;
  BoundaryPoints pts_;
  std::vector<CriticalElement> elems_;
  std::vector<std::vector<int>> anchor_options_;  // per negative node
  std::vector<int> isogons_;
  std::vector<std::vector<std::uint64_t>> compat_;
  std::vector<int> positive_prefix_;
  int total_positive_ = 0;

  bool compatible(int x, int y) const;
  int positives_between(int u, int w) const;  // strictly between, cyclic
};

std::vector<CriticalElement> enumerate_elements(const Ribbon& a);
// Every complement component of the element's points holds an odd number of
// nodes.
bool odd_components(const Ribbon& a, const CriticalElement& e);

int oracle_invariant(const Ribbon& a, Kind k);
std::uint64_t count_packings(const Ribbon& a);
std::map<int, std::uint64_t> count_by_size(const Ribbon& a);
std::uint64_t count_minimal(const Ribbon& a, Kind k);
int compression(const Ribbon& a);
int max_nondeg_saddles(const Ribbon& a);
// Equals gamma_ext + sigma/2 - 1 (extrema minus saddles is the index).
int min_nondeg_saddles(const Ribbon& a);
// Number of critical-point-free extensions of a zig-zag permutation.
std::uint64_t count_free_extensions(const std::vector<int>& perm);

}  // namespace ribbon
