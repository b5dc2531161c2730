#include "affcrystal/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace affcrystal {

int DominantWeight::level() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

std::string to_string(const DominantWeight& w) {
  std::string s;
  for (int i = 0; i < w.n(); ++i) {
    int m = w.coeffs[i];
    if (m == 0) continue;
    if (!s.empty()) s += "+";
    if (m != 1) s += std::to_string(m) + "*";
    s += "L" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

AbacusConfig::AbacusConfig(int n, std::vector<BeadRow> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ < 1) throw std::invalid_argument("n must be positive");
  if (rows_.empty()) throw std::invalid_argument("an abacus needs at least one row");
}

int AbacusConfig::charge(int i) const {
  return rows_[mod(i, ell())].charge() - n_ * floor_div(i, ell());
}

int AbacusConfig::bead(int i, int k) const {
  return rows_[mod(i, ell())].bead(k) - n_ * floor_div(i, ell());
}

int AbacusConfig::max_length() const {
  int m = 0;
  for (const auto& r : rows_) m = std::max(m, r.partition().length());
  return m;
}

AbacusConfig AbacusConfig::with_row(int i, BeadRow r) const {
  auto rows = rows_;
  rows.at(i) = std::move(r);
  return AbacusConfig(n_, std::move(rows));
}

std::string AbacusConfig::key() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += "/";
    s += std::to_string(rows_[i].charge()) + ":";
    const auto& p = rows_[i].partition().parts();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) s += ".";
      s += std::to_string(p[j]);
    }
  }
  return s;
}

AbacusConfig vacuum_config(int n, const std::vector<int>& charges) {
  std::vector<BeadRow> rows;
  for (int c : charges) rows.push_back(BeadRow::vacuum(c));
  return AbacusConfig(n, std::move(rows));
}

AbacusConfig compact_config(const DominantWeight& w) {
  if (w.n() < 1 || w.level() < 1) throw std::invalid_argument("weight must have positive level");
  std::vector<int> charges;
  for (int r = w.n() - 1; r >= 0; --r) {
    if (w.coeffs[r] < 0) throw std::invalid_argument("weight coefficients must be nonnegative");
    charges.insert(charges.end(), w.coeffs[r], r);
  }
  return vacuum_config(w.n(), charges);
}

AbacusConfig from_partition(const Partition& lambda, int n, int ell) {
  return AbacusConfig(n, split_row(partition_to_bead_row(lambda, 0), ell));
}

BeadRow to_bead_row(const AbacusConfig& psi) { return interleave(psi.rows()); }

int bead_position(const AbacusConfig& psi, int i, int j) { return psi.bead(i, j); }

bool is_descending(const AbacusConfig& psi) {
  const int top = psi.max_length() + 1;
  for (int i = 0; i < psi.ell(); ++i)
    for (int k = 1; k <= top; ++k)
      if (psi.bead(i, k) < psi.bead(i + 1, k)) return false;
  return true;
}

bool is_compact(const AbacusConfig& psi) {
  return std::all_of(psi.rows().begin(), psi.rows().end(),
                     [](const BeadRow& r) { return r.partition().empty(); });
}

AbacusConfig compactify(const AbacusConfig& psi) {
  std::vector<int> charges;
  for (const auto& r : psi.rows()) charges.push_back(r.charge());
  return vacuum_config(psi.n(), charges);
}

int weight(const AbacusConfig& psi) {
  int w = 0;
  for (const auto& r : psi.rows()) w += r.weight();
  return w;
}

std::optional<AbacusConfig> tighten(const AbacusConfig& psi, int k) {
  if (k < 1) return std::nullopt;
  const int ell = psi.ell();
  for (int i = 0; i < ell; ++i)
    if (psi.bead(i + 1, k) <= psi.bead(i, k + 1)) return std::nullopt;
  std::vector<BeadRow> rows;
  for (int i = 0; i < ell; ++i) rows.push_back(psi.row(i).with_bead(k, psi.bead(i + 1, k)));
  return AbacusConfig(psi.n(), std::move(rows));
}

std::optional<AbacusConfig> loosen(const AbacusConfig& psi, int k) {
  if (k < 1) return std::nullopt;
  const int ell = psi.ell();
  if (k > 1)
    for (int i = 0; i < ell; ++i)
      if (psi.bead(i - 1, k) >= psi.bead(i, k - 1)) return std::nullopt;
  std::vector<BeadRow> rows;
  for (int i = 0; i < ell; ++i) rows.push_back(psi.row(i).with_bead(k, psi.bead(i - 1, k)));
  return AbacusConfig(psi.n(), std::move(rows));
}

bool is_tight(const AbacusConfig& psi) {
  const int top = psi.max_length() + 1;
  for (int k = 1; k <= top; ++k)
    if (tighten(psi, k)) return false;
  return true;
}

DominantWeight highest_weight(const AbacusConfig& psi0) {
  if (!is_compact(psi0) || !is_descending(psi0))
    throw std::invalid_argument("highest weight needs a compact descending configuration");
  DominantWeight w{std::vector<int>(psi0.n(), 0)};
  for (const auto& r : psi0.rows()) ++w.coeffs[mod(r.charge(), psi0.n())];
  return w;
}

namespace {

// T_k to exhaustion for k from the top bead index down to 1; one pass reaches the fixpoint
// since T_k only ever enables T_k and T_{k-1}
AbacusConfig sweep(const AbacusConfig& psi, std::vector<int>& counts) {
  AbacusConfig cur = psi;
  const int top = psi.max_length() + 1;
  counts.assign(top + 1, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = top; k >= 1; --k)
      while (auto t = tighten(cur, k)) {
        cur = std::move(*t);
        ++counts[k];
        changed = true;
      }
  }
  return cur;
}

}  // namespace

AbacusConfig gamma(const AbacusConfig& psi) {
  std::vector<int> counts;
  return sweep(psi, counts);
}

Partition lambda_part(const AbacusConfig& psi) {
  std::vector<int> counts;
  sweep(psi, counts);
  return Partition(std::vector<int>(counts.begin() + 1, counts.end()));
}

AbacusConfig recombine(const AbacusConfig& gamma_part, const Partition& lambda) {
  AbacusConfig cur = gamma_part;
  for (int k = 1; k <= lambda.length(); ++k)
    for (int t = 0; t < lambda.part(k); ++t) {
      auto next = loosen(cur, k);
      if (!next) throw std::logic_error("recombine: loosening unexpectedly blocked");
      cur = std::move(*next);
    }
  return cur;
}

std::optional<AbacusConfig> gl_move(const AbacusConfig& psi, int p, GlDirection dir) {
  BeadRow row(0, lambda_part(psi));
  auto moved = dir == GlDirection::down ? row.move_bead(p + 1, p) : row.move_bead(p, p + 1);
  if (!moved) return std::nullopt;
  return recombine(gamma(psi), moved->partition());
}

int total_charge_mod_n(const AbacusConfig& psi) {
  int s = 0;
  for (const auto& r : psi.rows()) s += r.charge();
  return mod(s, psi.n());
}

std::vector<AbacusConfig> descending_successors(const AbacusConfig& psi) {
  std::vector<AbacusConfig> out;
  const int ell = psi.ell();
  for (int r = 0; r < ell; ++r) {
    const auto& row = psi.row(r);
    for (int k = 1; k <= row.partition().length() + 1; ++k) {
      int b = row.bead(k);
      if (k > 1 && row.bead(k - 1) == b + 1) continue;
      if (psi.bead(r - 1, k) < b + 1) continue;
      out.push_back(psi.with_row(r, row.with_bead(k, b + 1)));
    }
  }
  return out;
}

std::vector<std::vector<AbacusConfig>> enumerate_descending(const AbacusConfig& psi0, int max_weight) {
  std::vector<std::vector<AbacusConfig>> layers;
  if (max_weight < 0) return layers;
  layers.push_back({psi0});
  for (int w = 1; w <= max_weight; ++w) {
    std::vector<AbacusConfig> next;
    for (const auto& psi : layers.back())
      for (auto& s : descending_successors(psi)) next.push_back(std::move(s));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace affcrystal
