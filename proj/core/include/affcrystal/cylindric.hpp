#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "affcrystal/abacus.hpp"
#include "affcrystal/crystal.hpp"

namespace affcrystal {

// Diagonal i holds pi_{i,j} for j >= p_i (p_i = its charge); pi_{i,j} = pi_{i+ell, j-n}.
class CylindricPlanePartition {
 public:
  CylindricPlanePartition(int n, int ell, std::vector<ChargedPartition> rows);

  int n() const { return n_; }
  int ell() const { return ell_; }
  const std::vector<ChargedPartition>& rows() const { return rows_; }
  std::vector<int> profile() const;

  // extended indices; nullopt where the array is undefined (j < p_i)
  int start(int i) const;
  std::optional<int> entry(int i, int j) const;

  auto operator<=>(const CylindricPlanePartition&) const = default;

 private:
  int n_;
  int ell_;
  std::vector<ChargedPartition> rows_;
};

bool is_valid_cpp(const CylindricPlanePartition& pi);
CylindricPlanePartition zero_cpp(int n, const std::vector<int>& profile);

CylindricPlanePartition from_abacus(const AbacusConfig& psi);
AbacusConfig to_abacus(const CylindricPlanePartition& pi);

DominantWeight hw_of_cpp(const CylindricPlanePartition& pi);
int cpp_weight(const CylindricPlanePartition& pi);

// exact n*x/ell + y - z, compared by cross multiplication
struct Rational {
  long long num = 0;
  long long den = 1;
  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

// box centred at (x, y, z): diagonal x, column y, layer z (first layer z = 1)
struct Box {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Box&) const = default;
};

Box canonical_box(const Box& b, int n, int ell);
int box_color(const Box& b, int n);
Rational t_value(const Box& b, int n, int ell);

// sorted by t
std::vector<Box> addable_boxes(const CylindricPlanePartition& pi, int i);
std::vector<Box> removable_boxes(const CylindricPlanePartition& pi, int i);

std::optional<CylindricPlanePartition> f_cpp(const CylindricPlanePartition& pi, int i);
std::optional<CylindricPlanePartition> e_cpp(const CylindricPlanePartition& pi, int i);

// transpose onto the (ell, n) cylinder
CylindricPlanePartition reflect(const CylindricPlanePartition& pi);
DominantWeight dual_weight(const DominantWeight& w);

// shift every diagonal's start by k, relabelling colours c_i -> c_{i+k}
CylindricPlanePartition rotate_colors(const CylindricPlanePartition& pi, int k);

std::string render_text(const CylindricPlanePartition& pi);

}  // namespace affcrystal
