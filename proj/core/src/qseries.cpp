#include "affcrystal/qseries.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "affcrystal/crystal.hpp"
#include "affcrystal/cylindric.hpp"

namespace affcrystal {

QSeries::QSeries(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  c_.assign(max_degree + 1, 0);
}

QSeries QSeries::one(int max_degree) {
  QSeries s(max_degree);
  s.c_[0] = 1;
  return s;
}

QSeries QSeries::from_coeffs(std::vector<Integer> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("a series needs at least its constant term");
  QSeries s(0);
  s.c_ = std::move(coeffs);
  return s;
}

namespace {
void same_degree(const QSeries& a, const QSeries& b) {
  if (a.max_degree() != b.max_degree()) throw std::invalid_argument("series truncated at different degrees");
}
}  // namespace

QSeries& QSeries::operator+=(const QSeries& o) {
  same_degree(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  same_degree(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  same_degree(*this, o);
  std::vector<Integer> r(c_.size(), 0);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; a + b < c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(r);
  return *this;
}

QSeries& QSeries::divide_one_minus(int k) {
  if (k < 1) throw std::invalid_argument("1/(1 - q^k) needs k >= 1");
  for (int t = k; t <= max_degree(); ++t) c_[t] += c_[t - k];
  return *this;
}

QSeries& QSeries::multiply_one_minus(int k) {
  if (k < 1) throw std::invalid_argument("(1 - q^k) needs k >= 1");
  for (int t = max_degree(); t >= k; --t) c_[t] -= c_[t - k];
  return *this;
}

std::optional<int> QSeries::first_mismatch(const QSeries& o) const {
  const int top = std::min(max_degree(), o.max_degree());
  for (int k = 0; k <= top; ++k)
    if (c_[k] != o.c_[k]) return k;
  return std::nullopt;
}

std::string to_lines(const QSeries& s) {
  std::string out;
  for (int k = 0; k <= s.max_degree(); ++k) out += std::to_string(k) + "\t" + s[k].str() + "\n";
  return out;
}

QSeries euler_inverse(int m, int max_degree) {
  if (m < 1) throw std::invalid_argument("euler_inverse needs m >= 1");
  QSeries s = QSeries::one(max_degree);
  for (int k = 1; m * k <= max_degree; ++k) s.divide_one_minus(m * k);
  return s;
}

QSeries dimq_crystal(const DominantWeight& w, int max_degree) {
  auto g = crystal_graph(compact_config(w), max_degree);
  QSeries s(max_degree);
  for (int d = 0; d <= max_degree; ++d) s[d] = static_cast<long>(g.layers[d].size());
  return s;
}

QSeries Z_rep(const DominantWeight& w, int max_degree) {
  return dimq_crystal(w, max_degree) * euler_inverse(w.n(), max_degree);
}

Boundary boundary_of(const DominantWeight& w) {
  Boundary bd{w.n(), w.level(), {}, {}};
  const int N = bd.N();
  bd.B.assign(N, 0);
  int prefix = 0;
  for (int a = 1; a <= w.n(); ++a) {
    prefix += w.coeffs[a - 1];
    bd.B[mod(a + prefix, N)] = 1;
  }
  for (int b : bd.B) bd.A.push_back(1 - b);
  return bd;
}

QSeries Z_borodin(const Boundary& bd, int max_degree, Residue residue) {
  const int N = bd.N();
  QSeries s = euler_inverse(N, max_degree);
  for (int i = 0; i < N; ++i) {
    if (!bd.A[i]) continue;
    for (int j = 0; j < N; ++j) {
      if (!bd.B[j]) continue;
      const int r = residue == Residue::smallest_nonnegative ? mod(i - j, N) : std::abs(i - j);
      if (r == 0) throw std::logic_error("A and B steps overlap");
      for (int e = r; e <= max_degree; e += N) s.divide_one_minus(e);
    }
  }
  return s;
}

QSeries Z_bruteforce(const AbacusConfig& psi0, int max_degree) {
  if (!is_compact(psi0) || !is_descending(psi0))
    throw std::invalid_argument("brute force needs a compact descending configuration");
  auto layers = enumerate_descending(psi0, max_degree);
  QSeries s(max_degree);
  for (int d = 0; d <= max_degree; ++d) s[d] = static_cast<long>(layers[d].size());
  return s;
}

namespace {
IdentityCheck compare(QSeries lhs, QSeries rhs) {
  IdentityCheck c;
  c.mismatch_degree = lhs.first_mismatch(rhs);
  c.holds = !c.mismatch_degree;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}
}  // namespace

IdentityCheck check_rank_level(const DominantWeight& w, int max_degree) {
  const int n = w.n(), ell = w.level();
  if (n < 2 || ell < 2) throw std::invalid_argument("rank-level duality needs n, ell >= 2");
  return compare(Z_rep(w, max_degree),
                 dimq_crystal(dual_weight(w), max_degree) * euler_inverse(ell, max_degree));
}

IdentityCheck check_level_one(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("level-one identity needs n >= 2");
  IdentityCheck last;
  for (int i = 0; i < n; ++i) {
    DominantWeight w{std::vector<int>(n, 0)};
    w.coeffs[i] = 1;
    last = compare(Z_rep(w, max_degree), euler_inverse(1, max_degree));
    if (!last.holds) return last;
  }
  return last;
}

std::vector<DominantWeight> dominant_weights(int n, int level) {
  std::vector<DominantWeight> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int idx, int rest) {
    if (idx == n - 1) {
      cur[idx] = rest;
      out.push_back({cur});
      return;
    }
    for (int m = rest; m >= 0; --m) {
      cur[idx] = m;
      rec(idx + 1, rest - m);
    }
  };
  if (n >= 1 && level >= 0) rec(0, level);
  return out;
}

}  // namespace affcrystal
