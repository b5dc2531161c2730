#include "affcrystal/cylindric.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

CylindricPlanePartition::CylindricPlanePartition(int n, int ell, std::vector<ChargedPartition> rows)
    : n_(n), ell_(ell), rows_(std::move(rows)) {
  if (n_ < 1 || ell_ < 1) throw std::invalid_argument("n and ell must be positive");
  if (static_cast<int>(rows_.size()) != ell_) throw std::invalid_argument("expected ell diagonals");
}

std::vector<int> CylindricPlanePartition::profile() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(r.charge);
  return p;
}

int CylindricPlanePartition::start(int i) const {
  return rows_[mod(i, ell_)].charge - n_ * floor_div(i, ell_);
}

std::optional<int> CylindricPlanePartition::entry(int i, int j) const {
  const int s = start(i);
  if (j < s) return std::nullopt;
  return rows_[mod(i, ell_)].partition.part(j - s + 1);
}

bool is_valid_cpp(const CylindricPlanePartition& pi) {
  const int ell = pi.ell();
  for (int i = 0; i < ell; ++i) {
    if (pi.start(i) < pi.start(i + 1)) return false;
    const int len_here = pi.rows()[i].partition.length();
    const int len_next = pi.rows()[mod(i + 1, ell)].partition.length();
    const int last = std::max(pi.start(i) + len_here, pi.start(i + 1) + len_next);
    for (int j = pi.start(i); j <= last; ++j)
      if (*pi.entry(i, j) < *pi.entry(i + 1, j)) return false;
  }
  return true;
}

CylindricPlanePartition zero_cpp(int n, const std::vector<int>& profile) {
  std::vector<ChargedPartition> rows;
  for (int p : profile) rows.push_back({p, Partition()});
  return CylindricPlanePartition(n, static_cast<int>(profile.size()), std::move(rows));
}

CylindricPlanePartition from_abacus(const AbacusConfig& psi) {
  if (!is_descending(psi)) throw std::invalid_argument("configuration is not descending");
  std::vector<ChargedPartition> rows;
  for (const auto& r : psi.rows()) rows.push_back({r.charge(), r.partition().conjugate()});
  return CylindricPlanePartition(psi.n(), psi.ell(), std::move(rows));
}

AbacusConfig to_abacus(const CylindricPlanePartition& pi) {
  if (!is_valid_cpp(pi)) throw std::invalid_argument("not a cylindric plane partition");
  std::vector<BeadRow> rows;
  for (const auto& r : pi.rows()) rows.emplace_back(r.charge, r.partition.conjugate());
  return AbacusConfig(pi.n(), std::move(rows));
}

DominantWeight hw_of_cpp(const CylindricPlanePartition& pi) {
  DominantWeight w{std::vector<int>(pi.n(), 0)};
  for (const auto& r : pi.rows()) ++w.coeffs[mod(r.charge, pi.n())];
  return w;
}

int cpp_weight(const CylindricPlanePartition& pi) {
  int s = 0;
  for (const auto& r : pi.rows()) s += r.partition.size();
  return s;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num * o.den <=> o.num * den;
}

Box canonical_box(const Box& b, int n, int ell) {
  const int q = floor_div(b.x, ell);
  return {b.x - q * ell, b.y + q * n, b.z};
}

int box_color(const Box& b, int n) { return mod(b.y - b.z + 1, n); }

Rational t_value(const Box& b, int n, int ell) {
  return {static_cast<long long>(n) * b.x + static_cast<long long>(ell) * (b.y - b.z), ell};
}

namespace {

void sort_by_t(std::vector<Box>& boxes, int n, int ell) {
  std::sort(boxes.begin(), boxes.end(),
            [&](const Box& a, const Box& b) { return t_value(a, n, ell) < t_value(b, n, ell); });
}

}  // namespace

std::vector<Box> addable_boxes(const CylindricPlanePartition& pi, int i) {
  std::vector<Box> out;
  for (int r = 0; r < pi.ell(); ++r) {
    const int s = pi.start(r);
    const int len = pi.rows()[r].partition.length();
    for (int j = s; j <= s + len; ++j) {
      const int h = *pi.entry(r, j);
      if (j > s && *pi.entry(r, j - 1) < h + 1) continue;
      Box b{r, j, h + 1};
      if (box_color(b, pi.n()) == mod(i, pi.n())) out.push_back(b);
    }
  }
  sort_by_t(out, pi.n(), pi.ell());
  return out;
}

std::vector<Box> removable_boxes(const CylindricPlanePartition& pi, int i) {
  std::vector<Box> out;
  for (int r = 0; r < pi.ell(); ++r) {
    const int s = pi.start(r);
    const int len = pi.rows()[r].partition.length();
    for (int j = s; j < s + len; ++j) {
      const int h = *pi.entry(r, j);
      if (*pi.entry(r, j + 1) > h - 1) continue;
      Box b{r, j, h};
      if (box_color(b, pi.n()) == mod(i, pi.n())) out.push_back(b);
    }
  }
  sort_by_t(out, pi.n(), pi.ell());
  return out;
}

namespace {

CylindricPlanePartition change_box(const CylindricPlanePartition& pi, const Box& b, int delta) {
  auto rows = pi.rows();
  auto& row = rows[b.x];
  std::vector<int> parts = row.partition.parts();
  const std::size_t idx = b.y - row.charge;
  if (parts.size() <= idx) parts.resize(idx + 1, 0);
  parts[idx] += delta;
  row.partition = Partition(std::move(parts));
  CylindricPlanePartition out(pi.n(), pi.ell(), std::move(rows));
  if (!is_valid_cpp(out)) throw std::logic_error("box move left the cylindric plane partitions");
  return out;
}

struct BoxBrackets {
  std::vector<Box> boxes;
  BracketString brackets;
};

// merge A_i (opening) and R_i (closing) by t; t never ties within one colour
BoxBrackets box_brackets(const CylindricPlanePartition& pi, int i) {
  BoxBrackets bb;
  std::vector<std::pair<Box, bool>> all;
  for (const auto& b : addable_boxes(pi, i)) all.emplace_back(b, true);
  for (const auto& b : removable_boxes(pi, i)) all.emplace_back(b, false);
  const int n = pi.n(), ell = pi.ell();
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    return t_value(a.first, n, ell) < t_value(b.first, n, ell);
  });
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    bb.boxes.push_back(all[idx].first);
    bb.brackets.push_back({all[idx].second, static_cast<int>(idx)});
  }
  return bb;
}

}  // namespace

std::optional<CylindricPlanePartition> f_cpp(const CylindricPlanePartition& pi, int i) {
  auto bb = box_brackets(pi, i);
  auto sig = signature_reduce(bb.brackets);
  if (!sig.first_open) return std::nullopt;
  return change_box(pi, bb.boxes[*sig.first_open], 1);
}

std::optional<CylindricPlanePartition> e_cpp(const CylindricPlanePartition& pi, int i) {
  auto bb = box_brackets(pi, i);
  auto sig = signature_reduce(bb.brackets);
  if (!sig.last_close) return std::nullopt;
  return change_box(pi, bb.boxes[*sig.last_close], -1);
}

CylindricPlanePartition reflect(const CylindricPlanePartition& pi) {
  if (!is_valid_cpp(pi)) throw std::invalid_argument("not a cylindric plane partition");
  std::vector<ChargedPartition> rows;
  for (int a = 0; a < pi.n(); ++a) {
    int q = 0;
    while (pi.start(q) > a) ++q;
    while (pi.start(q - 1) <= a) --q;
    std::vector<int> parts;
    for (int i = q;; ++i) {
      int v = *pi.entry(i, a);
      if (v == 0) break;
      parts.push_back(v);
    }
    rows.push_back({q, Partition(std::move(parts))});
  }
  return CylindricPlanePartition(pi.ell(), pi.n(), std::move(rows));
}

DominantWeight dual_weight(const DominantWeight& w) {
  const int ell = w.level();
  if (ell < 1) throw std::invalid_argument("weight must have positive level");
  DominantWeight out{std::vector<int>(ell, 0)};
  int tail = 0;
  for (int i = w.n() - 1; i >= 0; --i) {
    tail += w.coeffs[i];
    ++out.coeffs[mod(tail, ell)];
  }
  return out;
}

CylindricPlanePartition rotate_colors(const CylindricPlanePartition& pi, int k) {
  auto rows = pi.rows();
  for (auto& r : rows) r.charge += k;
  return CylindricPlanePartition(pi.n(), pi.ell(), std::move(rows));
}

std::string render_text(const CylindricPlanePartition& pi) {
  std::ostringstream os;
  int lo = pi.start(pi.ell() - 1), hi = lo;
  for (int i = 0; i < pi.ell(); ++i)
    hi = std::max(hi, pi.start(i) + pi.rows()[i].partition.length());
  os << "n=" << pi.n() << " ell=" << pi.ell() << " weight=" << cpp_weight(pi) << "\n";
  os << "    j";
  for (int j = lo; j <= hi; ++j) os << std::setw(4) << j;
  os << "\n";
  for (int i = 0; i < pi.ell(); ++i) {
    os << "i=" << std::setw(3) << i;
    for (int j = lo; j <= hi; ++j) {
      auto v = pi.entry(i, j);
      if (v) os << std::setw(4) << *v;
      else os << std::setw(4) << '.';
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace affcrystal
