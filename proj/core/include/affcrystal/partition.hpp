#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affcrystal {

// floor division / nonnegative residue, used everywhere slots meet periods
inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline int mod(int a, int b) { return a - b * floor_div(a, b); }

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped. Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  // 1-based; zero past the end
  int part(int k) const { return k >= 1 && k <= length() ? parts_[k - 1] : 0; }
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// All partitions of m, in reverse lexicographic order.
std::vector<Partition> partitions_of(int m);

struct ChargedPartition {
  int charge = 0;
  Partition partition;
  auto operator<=>(const ChargedPartition&) const = default;
};

// Slot b stands for the half-integer position b + 1/2.
// The k-th bead from the right sits at slot partition.part(k) - k + charge.
class BeadRow {
 public:
  BeadRow() = default;
  BeadRow(int charge, Partition partition)
      : charge_(charge), partition_(std::move(partition)) {}
  static BeadRow vacuum(int charge) { return BeadRow(charge, Partition()); }
  // Every slot below `floor` is occupied; `occupied` lists the occupied slots at or above it.
  static BeadRow from_slots(int floor, std::vector<int> occupied);

  int charge() const { return charge_; }
  const Partition& partition() const { return partition_; }
  int weight() const { return partition_.size(); }

  int bead(int k) const { return partition_.part(k) - k + charge_; }
  bool occupied(int slot) const;
  // lowest slot that can be empty; everything below is full
  int floor() const { return charge_ - partition_.length(); }
  // occupied slots >= floor(), decreasing
  std::vector<int> explicit_beads() const;

  // Moves the bead at `from` to the empty slot `to`; nullopt if that is impossible.
  std::optional<BeadRow> move_bead(int from, int to) const;
  // Moves the k-th bead to `slot`, which must keep the bead order strict.
  BeadRow with_bead(int k, int slot) const;

  auto operator<=>(const BeadRow&) const = default;

 private:
  int charge_ = 0;
  Partition partition_;
};

BeadRow partition_to_bead_row(const Partition& lambda, int charge);
std::pair<int, Partition> bead_row_to_partition(const BeadRow& row);

struct RibbonMove {
  int source_slot = 0;
  int length = 1;
  int target_slot() const { return source_slot + length; }
};

// The ribbon whose rightmost box sits above position `rightmost_col` of the Russian diagram.
inline RibbonMove ribbon_at(int ell, int rightmost_col) { return {rightmost_col - ell, ell}; }

std::optional<Partition> add_ribbon(const Partition& lambda, int ell, int rightmost_col);
std::optional<Partition> remove_ribbon(const Partition& lambda, int ell, int rightmost_col);

// Cut a row into blocks of ell slots starting at slot 0; block b gives its j-th slot to row j.
std::vector<BeadRow> split_row(const BeadRow& row, int ell);
BeadRow interleave(const std::vector<BeadRow>& rows);

std::vector<ChargedPartition> ell_quotient(const Partition& lambda, int ell);
std::vector<Partition> normalize_quotient(const std::vector<ChargedPartition>& quotient);
Partition ell_core(const Partition& lambda, int ell);

}  // namespace affcrystal
