#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affcrystal/partition.hpp"

namespace affcrystal {

// sum of m_i * Lambda_i
struct DominantWeight {
  std::vector<int> coeffs;

  int n() const { return static_cast<int>(coeffs.size()); }
  int level() const;
  bool operator==(const DominantWeight&) const = default;
};

// "2*L0+3*L1+L2"; zero coefficients are omitted, the zero weight prints as "0"
std::string to_string(const DominantWeight& w);

// ell bead rows with gap colours mod n; row 0 is the bottom row
class AbacusConfig {
 public:
  AbacusConfig(int n, std::vector<BeadRow> rows);

  int n() const { return n_; }
  int ell() const { return static_cast<int>(rows_.size()); }
  const std::vector<BeadRow>& rows() const { return rows_; }
  const BeadRow& row(int i) const { return rows_.at(i); }

  // extended rows: row i + ell is row i shifted n slots to the left
  int charge(int i) const;
  int bead(int i, int k) const;
  int max_length() const;

  AbacusConfig with_row(int i, BeadRow r) const;
  std::string key() const;

  auto operator<=>(const AbacusConfig&) const = default;

 private:
  int n_;
  std::vector<BeadRow> rows_;
};

AbacusConfig vacuum_config(int n, const std::vector<int>& charges);
// canonical compact descending configuration of highest weight w (level = number of rows)
AbacusConfig compact_config(const DominantWeight& w);

AbacusConfig from_partition(const Partition& lambda, int n, int ell);
// single-row reading; the charge is the sum of the row charges
BeadRow to_bead_row(const AbacusConfig& psi);

int bead_position(const AbacusConfig& psi, int i, int j);
bool is_descending(const AbacusConfig& psi);
bool is_compact(const AbacusConfig& psi);
AbacusConfig compactify(const AbacusConfig& psi);
int weight(const AbacusConfig& psi);

std::optional<AbacusConfig> tighten(const AbacusConfig& psi, int k);
std::optional<AbacusConfig> loosen(const AbacusConfig& psi, int k);
bool is_tight(const AbacusConfig& psi);

DominantWeight highest_weight(const AbacusConfig& psi0);

AbacusConfig gamma(const AbacusConfig& psi);
Partition lambda_part(const AbacusConfig& psi);
AbacusConfig recombine(const AbacusConfig& gamma_part, const Partition& lambda);

enum class GlDirection { down, up };
// down: E_{p,p+1} moves the bead at p+1 to p; up: E_{p+1,p} moves p to p+1
std::optional<AbacusConfig> gl_move(const AbacusConfig& psi, int p, GlDirection dir);

int total_charge_mod_n(const AbacusConfig& psi);

// single right moves that keep the configuration descending
std::vector<AbacusConfig> descending_successors(const AbacusConfig& psi);
// all descending configurations with compactification psi0, bucketed by weight 0..max_weight
std::vector<std::vector<AbacusConfig>> enumerate_descending(const AbacusConfig& psi0, int max_weight);

}  // namespace affcrystal
