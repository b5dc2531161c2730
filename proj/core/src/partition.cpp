#include "affcrystal/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace affcrystal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(m, m);
  return out;
}

BeadRow BeadRow::from_slots(int floor, std::vector<int> occupied) {
  std::sort(occupied.begin(), occupied.end(), std::greater<>());
  occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
  if (!occupied.empty() && occupied.back() < floor)
    throw std::invalid_argument("explicit bead below the floor");
  const int m = static_cast<int>(occupied.size());
  const int charge = floor + m;
  std::vector<int> parts(m);
  for (int k = 1; k <= m; ++k) parts[k - 1] = occupied[k - 1] + k - charge;
  return BeadRow(charge, Partition(std::move(parts)));
}

bool BeadRow::occupied(int slot) const {
  if (slot < floor()) return true;
  for (int k = 1; k <= partition_.length(); ++k) {
    int b = bead(k);
    if (b == slot) return true;
    if (b < slot) return false;
  }
  return false;
}

std::vector<int> BeadRow::explicit_beads() const {
  std::vector<int> out;
  out.reserve(partition_.length());
  for (int k = 1; k <= partition_.length(); ++k) out.push_back(bead(k));
  return out;
}

std::optional<BeadRow> BeadRow::move_bead(int from, int to) const {
  if (!occupied(from) || occupied(to)) return std::nullopt;
  int lo = std::min({floor(), from, to});
  std::vector<int> slots = explicit_beads();
  for (int s = lo; s < floor(); ++s) slots.push_back(s);
  std::erase(slots, from);
  slots.push_back(to);
  return from_slots(lo, std::move(slots));
}

BeadRow BeadRow::with_bead(int k, int slot) const {
  std::vector<int> parts = partition_.parts();
  if (static_cast<int>(parts.size()) < k) parts.resize(k, 0);
  parts[k - 1] = slot + k - charge_;
  return BeadRow(charge_, Partition(std::move(parts)));
}

BeadRow partition_to_bead_row(const Partition& lambda, int charge) { return BeadRow(charge, lambda); }

std::pair<int, Partition> bead_row_to_partition(const BeadRow& row) {
  return {row.charge(), row.partition()};
}

std::optional<Partition> add_ribbon(const Partition& lambda, int ell, int rightmost_col) {
  if (ell < 1) throw std::invalid_argument("ribbon length must be positive");
  auto mv = ribbon_at(ell, rightmost_col);
  auto row = partition_to_bead_row(lambda, 0).move_bead(mv.source_slot, mv.target_slot());
  if (!row) return std::nullopt;
  return row->partition();
}

std::optional<Partition> remove_ribbon(const Partition& lambda, int ell, int rightmost_col) {
  if (ell < 1) throw std::invalid_argument("ribbon length must be positive");
  auto mv = ribbon_at(ell, rightmost_col);
  auto row = partition_to_bead_row(lambda, 0).move_bead(mv.target_slot(), mv.source_slot);
  if (!row) return std::nullopt;
  return row->partition();
}

std::vector<BeadRow> split_row(const BeadRow& row, int ell) {
  if (ell < 1) throw std::invalid_argument("number of rows must be positive");
  const int lo = floor_div(row.floor(), ell);
  const int hi = floor_div(std::max(row.bead(1), row.floor()), ell) + 1;
  std::vector<BeadRow> out;
  out.reserve(ell);
  for (int j = 0; j < ell; ++j) {
    std::vector<int> cols;
    for (int b = lo; b < hi; ++b)
      if (row.occupied(ell * b + j)) cols.push_back(b);
    out.push_back(BeadRow::from_slots(lo, std::move(cols)));
  }
  return out;
}

BeadRow interleave(const std::vector<BeadRow>& rows) {
  const int ell = static_cast<int>(rows.size());
  if (ell < 1) throw std::invalid_argument("no rows to interleave");
  int lo = rows[0].floor(), hi = rows[0].bead(1);
  for (const auto& r : rows) {
    lo = std::min(lo, r.floor());
    hi = std::max({hi, r.bead(1), r.floor()});
  }
  std::vector<int> slots;
  for (int s = ell * lo; s < ell * (hi + 1); ++s)
    if (rows[mod(s, ell)].occupied(floor_div(s, ell))) slots.push_back(s);
  return BeadRow::from_slots(ell * lo, std::move(slots));
}

std::vector<ChargedPartition> ell_quotient(const Partition& lambda, int ell) {
  std::vector<ChargedPartition> out;
  for (const auto& r : split_row(partition_to_bead_row(lambda, 0), ell))
    out.push_back({r.charge(), r.partition()});
  return out;
}

std::vector<Partition> normalize_quotient(const std::vector<ChargedPartition>& quotient) {
  std::vector<Partition> out;
  for (const auto& q : quotient) out.push_back(q.partition);
  return out;
}

Partition ell_core(const Partition& lambda, int ell) {
  auto rows = split_row(partition_to_bead_row(lambda, 0), ell);
  for (auto& r : rows) r = BeadRow::vacuum(r.charge());
  return interleave(rows).partition();
}

}  // namespace affcrystal
