#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "affcrystal/affcrystal.hpp"

namespace fixtures {

using namespace affcrystal;

inline Partition ten_parts() { return Partition{12, 11, 10, 9, 7, 5, 3, 3, 3, 1}; }
// bead at -1 pushed to 3
inline Partition ten_parts_plus_ribbon() { return Partition{12, 11, 10, 9, 8, 8, 3, 3, 3, 1}; }
// ten_parts_plus_ribbon after f_0 for n=3, ell=4: bead at 9 pushed to 13
inline Partition ten_parts_after_f0() { return Partition{14, 13, 10, 9, 8, 8, 3, 3, 3, 1}; }

// n=3, ell=4, not tight; T_2 applies
inline AbacusConfig loose_example() {
  return AbacusConfig(3, {BeadRow(1, {2, 2}), BeadRow(0, {2, 1, 1}), BeadRow(0, {1, 1}), BeadRow(0, {1})});
}
inline AbacusConfig loose_after_t2() {
  return AbacusConfig(3, {BeadRow(1, {2}), BeadRow(0, {2, 1, 1}), BeadRow(0, {1}), BeadRow(0, {1})});
}

inline AbacusConfig compact_example() { return vacuum_config(3, {2, 1, 1, 0}); }

inline AbacusConfig descending_example() {
  return AbacusConfig(3, {BeadRow(2, {2, 1, 1}), BeadRow(1, {2, 2, 1}), BeadRow(1, {2, 1}), BeadRow(0, {2, 2, 1, 1})});
}

inline CylindricPlanePartition example_cpp() {
  return CylindricPlanePartition(3, 4, {{2, {3, 1}}, {1, {3, 2}}, {1, {2, 1}}, {0, {4, 2}}});
}

inline CylindricPlanePartition wide_cpp() {
  return CylindricPlanePartition(
      3, 6, {{2, {7, 3}}, {1, {6, 5, 1}}, {1, {4, 4, 1}}, {1, {4, 1}}, {0, {5, 3}}, {0, {3, 3}}});
}

inline DominantWeight weight(std::vector<int> c) { return DominantWeight{std::move(c)}; }

// every descending configuration over every compact configuration of level ell, weight <= w
inline std::vector<AbacusConfig> all_descending(int n, int ell, int max_weight) {
  std::vector<AbacusConfig> out;
  for (const auto& lam : dominant_weights(n, ell))
    for (const auto& layer : enumerate_descending(compact_config(lam), max_weight))
      out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

inline std::vector<Partition> partitions_up_to(int m) {
  std::vector<Partition> out;
  for (int s = 0; s <= m; ++s)
    for (auto& p : partitions_of(s)) out.push_back(std::move(p));
  return out;
}

// boxes (row, col), 1-based
using Cell = std::pair<int, int>;
inline std::set<Cell> cells(const Partition& p) {
  std::set<Cell> c;
  for (int r = 1; r <= p.length(); ++r)
    for (int col = 1; col <= p.part(r); ++col) c.insert({r, col});
  return c;
}

// mu / lambda is a connected strip of ell boxes containing no 2x2 square; returns its largest content
inline std::optional<int> ribbon_rightmost_content(const Partition& lambda, const Partition& mu, int ell) {
  auto a = cells(lambda), b = cells(mu);
  if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return std::nullopt;
  std::vector<Cell> skew;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(skew));
  if (static_cast<int>(skew.size()) != ell) return std::nullopt;
  std::set<Cell> s(skew.begin(), skew.end());
  for (auto [r, c] : skew)
    if (s.count({r + 1, c}) && s.count({r, c + 1}) && s.count({r + 1, c + 1})) return std::nullopt;
  std::set<Cell> seen{skew.front()};
  std::vector<Cell> stack{skew.front()};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}})
      if (s.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  if (seen.size() != s.size()) return std::nullopt;
  int best = skew.front().second - skew.front().first;
  for (auto [r, c] : skew) best = std::max(best, c - r);
  return best;
}

// remove ell-ribbons in every possible order; returns the set of terminal partitions
inline std::set<Partition> strip_ribbons(const Partition& lambda, int ell) {
  std::set<Partition> terminal, seen;
  std::function<void(const Partition&)> rec = [&](const Partition& p) {
    if (!seen.insert(p).second) return;
    bool any = false;
    for (const auto& mu : partitions_of(p.size() - ell)) {
      if (ribbon_rightmost_content(mu, p, ell)) {
        any = true;
        rec(mu);
      }
    }
    if (!any) terminal.insert(p);
  };
  rec(lambda);
  return terminal;
}

}  // namespace fixtures

namespace gen {

using namespace affcrystal;

// hand-rolled generators for property tests; seeded so failures reproduce
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[uniform(0, static_cast<int>(v.size()) - 1)]; }
};

inline Partition partition(Rng& rng, int max_size) {
  int m = rng.uniform(0, max_size);
  auto all = partitions_of(m);
  return rng.pick(all);
}

inline DominantWeight dominant(Rng& rng, int n, int level) {
  auto all = dominant_weights(n, level);
  return rng.pick(all);
}

// random walk of right moves that keep the configuration descending
inline AbacusConfig descending(Rng& rng, int n, int ell, int steps) {
  AbacusConfig psi = compact_config(dominant(rng, n, ell));
  for (int s = 0; s < steps; ++s) {
    auto next = descending_successors(psi);
    if (next.empty()) break;
    psi = rng.pick(next);
  }
  return psi;
}

// arbitrary (usually non-descending) configuration
inline AbacusConfig any_config(Rng& rng, int n, int ell, int max_size) {
  std::vector<BeadRow> rows;
  for (int j = 0; j < ell; ++j) rows.emplace_back(rng.uniform(-2, 2), partition(rng, max_size));
  return AbacusConfig(n, std::move(rows));
}

}  // namespace gen
