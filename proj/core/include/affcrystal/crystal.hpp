#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affcrystal/abacus.hpp"

namespace affcrystal {

// `ref` indexes whatever the caller used to build the string (a bead move, a box, a tensor factor)
struct Token {
  bool open = true;
  int ref = 0;
  bool operator==(const Token&) const = default;
};
using BracketString = std::vector<Token>;

std::string to_string(const BracketString& s);

struct Signature {
  std::optional<std::size_t> first_open;  // leftmost uncanceled "("
  std::optional<std::size_t> last_close;  // rightmost uncanceled ")"
  int uncanceled_close = 0;               // epsilon
  int uncanceled_open = 0;                // phi
};

// "()" pairs cancel; what is left reads )^a (^b
Signature signature_reduce(const BracketString& s);

struct AffineWeight {
  std::vector<int> coeffs;
  bool operator==(const AffineWeight&) const = default;
};

// alpha_i in Lambda coordinates: 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1}
AffineWeight simple_root(int i, int n);

// --- arbitrary configurations: brackets over every colour-i gap, gap by gap, bottom row first
struct AbacusMove {
  int gap = 0;    // the move crosses the gap between slots gap-1 and gap
  int row = 0;
  int k = 0;      // bead index in its row
  bool right = true;
};
std::vector<AbacusMove> abacus_moves(const AbacusConfig& psi, int i);
BracketString abacus_brackets(const std::vector<AbacusMove>& moves);
std::optional<AbacusConfig> f_abacus(const AbacusConfig& psi, int i);
std::optional<AbacusConfig> e_abacus(const AbacusConfig& psi, int i);

// --- descending configurations: brackets grouped by bead index k, larger k further left
struct GroupedToken {
  int k = 0;
  int row = 0;
  bool open = true;
  bool operator==(const GroupedToken&) const = default;
};
std::vector<GroupedToken> descending_tokens(const AbacusConfig& psi, int i);
std::optional<AbacusConfig> f_descending(const AbacusConfig& psi, int i);
std::optional<AbacusConfig> e_descending(const AbacusConfig& psi, int i);

// --- partitions: l-ribbons keyed by their rightmost column k, coloured floor(k/l) mod n
std::optional<Partition> f_partition(const Partition& lambda, int i, int n, int ell);
std::optional<Partition> e_partition(const Partition& lambda, int i, int n, int ell);

// (epsilon_i, phi_i) from bracket counts
std::pair<int, int> eps_phi(const AbacusConfig& psi, int i);
std::pair<int, int> eps_phi(const Partition& lambda, int i, int n, int ell);

// reference: count how often the operators can be applied
template <class X, class E, class F>
std::pair<int, int> eps_phi_by_iteration(const X& x, E&& e, F&& f) {
  int eps = 0, phi = 0;
  for (auto y = e(x); y; y = e(*y)) ++eps;
  for (auto y = f(x); y; y = f(*y)) ++phi;
  return {eps, phi};
}

AffineWeight wt(const AbacusConfig& psi);

struct CrystalEdge {
  int degree = 0;  // of the source node
  int from = 0;    // index into layers[degree]
  int to = 0;      // index into layers[degree + 1]
  int color = 0;
};

struct CrystalGraph {
  std::vector<std::vector<AbacusConfig>> layers;  // sorted by key()
  std::vector<CrystalEdge> edges;
  std::vector<long> layer_sizes() const;
};

// tight configurations reachable from psi0 by f_i, up to principal degree max_degree
CrystalGraph crystal_graph(const AbacusConfig& psi0, int max_degree);

}  // namespace affcrystal
