#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "affcrystal/abacus.hpp"
#include "affcrystal/crystal.hpp"

namespace affcrystal {

// single-row filling of length ell; stored value v stands for the entry v + 1/2
struct PerfectElem {
  std::vector<int> entries;
  auto operator<=>(const PerfectElem&) const = default;
};

std::optional<PerfectElem> f_perfect(const PerfectElem& b, int i, int n);
std::optional<PerfectElem> e_perfect(const PerfectElem& b, int i, int n);

// by iterating the operators
std::pair<DominantWeight, DominantWeight> eps_phi_perfect(const PerfectElem& b, int n);

std::vector<PerfectElem> perfect_crystal(int n, int ell);

// k-th element (k >= 1) of the ground state path of w
PerfectElem ground_element(const DominantWeight& w, int k);

// ... (x) b_2 (x) b_1, equal to the ground state path outside `deviations`
struct Path {
  DominantWeight weight;
  std::map<int, PerfectElem> deviations;
  bool operator==(const Path&) const = default;
};

Path ground_state_path(const DominantWeight& w);
PerfectElem element_at(const Path& p, int k);
// drop deviations that coincide with the ground element
Path pruned(Path p);
// last position that can carry an uncanceled bracket
int path_extent(const Path& p);

struct PathToken {
  int k = 0;
  bool open = true;
  bool operator==(const PathToken&) const = default;
};

// brackets S_i(b_T) ... S_i(b_1) with T = path_extent(p); b_T keeps only its "("
std::vector<PathToken> path_tokens(const Path& p, int i);

std::optional<Path> f_path(const Path& p, int i);
std::optional<Path> e_path(const Path& p, int i);

Path J(const AbacusConfig& psi);
// inverse of J relative to the compact configuration psi0
AbacusConfig J_inverse(const Path& p, const AbacusConfig& psi0);

}  // namespace affcrystal
