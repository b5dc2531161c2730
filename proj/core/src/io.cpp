#include "affcrystal/io.hpp"

#include <algorithm>
#include <cctype>

namespace affcrystal {

json to_json(const Partition& p) { return p.parts(); }

json to_json(const ChargedPartition& p) { return {{"charge", p.charge}, {"parts", p.partition.parts()}}; }

json to_json(const AbacusConfig& psi) {
  json rows = json::array();
  for (const auto& r : psi.rows()) rows.push_back({{"charge", r.charge()}, {"parts", r.partition().parts()}});
  return {{"n", psi.n()}, {"ell", psi.ell()}, {"rows", rows}};
}

json to_json(const CylindricPlanePartition& pi) {
  json rows = json::array();
  for (const auto& r : pi.rows()) rows.push_back(r.partition.parts());
  return {{"n", pi.n()}, {"ell", pi.ell()}, {"profile", pi.profile()}, {"rows", rows}};
}

json to_json(const PerfectElem& b) { return b.entries; }

json to_json(const Path& p) {
  json dev = json::object();
  for (const auto& [k, b] : p.deviations) dev[std::to_string(k)] = b.entries;
  return {{"weight", p.weight.coeffs}, {"deviations", dev}};
}

namespace {

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(get_int(x, what));
  return out;
}

Partition strict_partition(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) throw ValidationError("partition parts must be positive");
    if (i + 1 < v.size() && v[i] < v[i + 1]) throw ValidationError("partition parts must be weakly decreasing");
  }
  return Partition(v);
}

}  // namespace

Partition partition_from_json(const json& j) { return strict_partition(int_array(j, "partition")); }

ChargedPartition charged_from_json(const json& j) {
  return {get_int(field(j, "charge"), "charge"), partition_from_json(field(j, "parts"))};
}

AbacusConfig abacus_from_json(const json& j) {
  const int n = get_int(field(j, "n"), "n");
  const int ell = get_int(field(j, "ell"), "ell");
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw ParseError("rows must be an array");
  if (n < 1 || ell < 1) throw ValidationError("n and ell must be positive");
  if (static_cast<int>(rows.size()) != ell) throw ValidationError("expected ell rows");
  std::vector<BeadRow> out;
  for (const auto& r : rows) {
    auto c = charged_from_json(r);
    out.emplace_back(c.charge, c.partition);
  }
  return AbacusConfig(n, std::move(out));
}

CylindricPlanePartition cpp_from_json(const json& j) {
  const int n = get_int(field(j, "n"), "n");
  const int ell = get_int(field(j, "ell"), "ell");
  auto profile = int_array(field(j, "profile"), "profile");
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw ParseError("rows must be an array");
  if (n < 1 || ell < 1) throw ValidationError("n and ell must be positive");
  if (static_cast<int>(rows.size()) != ell || static_cast<int>(profile.size()) != ell)
    throw ValidationError("expected ell rows and ell profile entries");
  std::vector<ChargedPartition> out;
  for (int i = 0; i < ell; ++i) {
    auto parts = int_array(rows[i], "row");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.push_back({profile[i], strict_partition(parts)});
  }
  CylindricPlanePartition pi(n, ell, std::move(out));
  if (!is_valid_cpp(pi)) throw ValidationError("not a cylindric plane partition");
  return pi;
}

PerfectElem perfect_from_json(const json& j, int n, int ell) {
  PerfectElem b{int_array(j, "perfect crystal element")};
  if (static_cast<int>(b.entries.size()) != ell) throw ValidationError("element must have ell entries");
  if (!std::is_sorted(b.entries.begin(), b.entries.end())) throw ValidationError("element entries must be sorted");
  for (int v : b.entries)
    if (v < 0 || v >= n) throw ValidationError("element entries must lie in 0..n-1");
  return b;
}

Path path_from_json(const json& j, int ell) {
  Path p;
  p.weight.coeffs = int_array(field(j, "weight"), "weight");
  const int n = p.weight.n();
  if (n < 2) throw ValidationError("weight needs at least two coefficients");
  for (int m : p.weight.coeffs)
    if (m < 0) throw ValidationError("weight coefficients must be nonnegative");
  if (p.weight.level() != ell) throw ValidationError("weight level must equal ell");
  const auto& dev = field(j, "deviations");
  if (!dev.is_object()) throw ParseError("deviations must be an object");
  for (const auto& [key, val] : dev.items()) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("bad position");
    } catch (const std::logic_error&) {
      throw ParseError("deviation keys must be integers");
    }
    if (k < 1) throw ValidationError("path positions start at 1");
    p.deviations[k] = perfect_from_json(val, n, ell);
  }
  return pruned(std::move(p));
}

DominantWeight parse_weight(const std::string& text, int n) {
  if (n < 1) throw ValidationError("n must be positive");
  DominantWeight w{std::vector<int>(n, 0)};
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty weight");
  std::size_t pos = 0;
  auto number = [&](const char* what) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError(std::string("expected ") + what + " in weight \"" + text + "\"");
    return std::stoi(s.substr(start, pos - start));
  };
  for (;;) {
    int coeff = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = number("coefficient");
      if (pos >= s.size() || s[pos] != '*') throw ParseError("expected '*' after coefficient");
      ++pos;
    }
    if (pos >= s.size() || (s[pos] != 'L' && s[pos] != 'l')) throw ParseError("expected L<i> in weight");
    ++pos;
    int idx = number("index");
    if (idx >= n) throw ValidationError("fundamental weight index out of range");
    w.coeffs[idx] += coeff;
    if (pos == s.size()) break;
    if (s[pos] != '+') throw ParseError("expected '+' in weight");
    ++pos;
  }
  return w;
}

}  // namespace affcrystal
