#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affcrystal/abacus.hpp"

namespace affcrystal {

using Integer = boost::multiprecision::cpp_int;

// power series in q, exact through q^max_degree
class QSeries {
 public:
  explicit QSeries(int max_degree);
  static QSeries one(int max_degree);
  static QSeries from_coeffs(std::vector<Integer> coeffs);

  int max_degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& operator[](int k) const { return c_.at(k); }
  Integer& operator[](int k) { return c_.at(k); }
  const std::vector<Integer>& coeffs() const { return c_; }

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  bool operator==(const QSeries&) const = default;

  // multiply by 1/(1 - q^k) and by (1 - q^k)
  QSeries& divide_one_minus(int k);
  QSeries& multiply_one_minus(int k);

  std::optional<int> first_mismatch(const QSeries& o) const;

 private:
  std::vector<Integer> c_;
};

// "k<TAB>coeff" lines
std::string to_lines(const QSeries& s);

// prod_{k>=1} 1/(1 - q^{mk})
QSeries euler_inverse(int m, int max_degree);

// layer sizes of the crystal graph of the canonical compact configuration of w
QSeries dimq_crystal(const DominantWeight& w, int max_degree);
QSeries Z_rep(const DominantWeight& w, int max_degree);

struct Boundary {
  int n = 0;
  int ell = 0;
  std::vector<int> A;
  std::vector<int> B;
  int N() const { return n + ell; }
  bool operator==(const Boundary&) const = default;
};

Boundary boundary_of(const DominantWeight& w);

// how the exponent offset of an (A-step i, B-step j) pair is reduced
enum class Residue {
  smallest_nonnegative,  // (i - j) mod N
  absolute_difference    // |i - j|, a deliberately wrong variant used for mutation testing
};

QSeries Z_borodin(const Boundary& bd, int max_degree, Residue residue = Residue::smallest_nonnegative);
// counts every descending configuration over psi0 by weight
QSeries Z_bruteforce(const AbacusConfig& psi0, int max_degree);

struct IdentityCheck {
  bool holds = false;
  std::optional<int> mismatch_degree;
  QSeries lhs{0};
  QSeries rhs{0};
};

IdentityCheck check_rank_level(const DominantWeight& w, int max_degree);
// every level-one weight of sl_n: dim_q(V) * prod 1/(1-q^{nk}) = prod 1/(1-q^k)
IdentityCheck check_level_one(int n, int max_degree);

std::vector<DominantWeight> dominant_weights(int n, int level);

}  // namespace affcrystal
