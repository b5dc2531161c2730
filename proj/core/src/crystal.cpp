#include "affcrystal/crystal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace affcrystal {

std::string to_string(const BracketString& s) {
  std::string out;
  for (const auto& t : s) out += t.open ? '(' : ')';
  return out;
}

Signature signature_reduce(const BracketString& s) {
  Signature sig;
  std::vector<std::size_t> opens;
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    if (s[idx].open) {
      opens.push_back(idx);
    } else if (!opens.empty()) {
      opens.pop_back();
    } else {
      sig.last_close = idx;
      ++sig.uncanceled_close;
    }
  }
  sig.uncanceled_open = static_cast<int>(opens.size());
  if (!opens.empty()) sig.first_open = opens.front();
  return sig;
}

AffineWeight simple_root(int i, int n) {
  AffineWeight a{std::vector<int>(n, 0)};
  a.coeffs[mod(i, n)] += 2;
  a.coeffs[mod(i - 1, n)] -= 1;
  a.coeffs[mod(i + 1, n)] -= 1;
  return a;
}

std::vector<AbacusMove> abacus_moves(const AbacusConfig& psi, int i) {
  std::vector<AbacusMove> moves;
  const int n = psi.n();
  for (int r = 0; r < psi.ell(); ++r) {
    const auto& row = psi.row(r);
    const int len = row.partition().length();
    for (int k = 1; k <= len + 1; ++k) {
      const int b = row.bead(k);
      if ((k == 1 || row.bead(k - 1) > b + 1) && mod(b + 1, n) == mod(i, n))
        moves.push_back({b + 1, r, k, true});
      if (k <= len && row.bead(k + 1) < b - 1 && mod(b, n) == mod(i, n))
        moves.push_back({b, r, k, false});
    }
  }
  std::sort(moves.begin(), moves.end(), [](const AbacusMove& a, const AbacusMove& b) {
    return std::tie(a.gap, a.row) < std::tie(b.gap, b.row);
  });
  return moves;
}

BracketString abacus_brackets(const std::vector<AbacusMove>& moves) {
  BracketString s;
  for (std::size_t idx = 0; idx < moves.size(); ++idx)
    s.push_back({moves[idx].right, static_cast<int>(idx)});
  return s;
}

namespace {

AbacusConfig shift_bead(const AbacusConfig& psi, int row, int k, int delta) {
  const auto& r = psi.row(row);
  return psi.with_row(row, r.with_bead(k, r.bead(k) + delta));
}

}  // namespace

std::optional<AbacusConfig> f_abacus(const AbacusConfig& psi, int i) {
  auto moves = abacus_moves(psi, i);
  auto sig = signature_reduce(abacus_brackets(moves));
  if (!sig.first_open) return std::nullopt;
  const auto& m = moves[*sig.first_open];
  return shift_bead(psi, m.row, m.k, 1);
}

std::optional<AbacusConfig> e_abacus(const AbacusConfig& psi, int i) {
  auto moves = abacus_moves(psi, i);
  auto sig = signature_reduce(abacus_brackets(moves));
  if (!sig.last_close) return std::nullopt;
  const auto& m = moves[*sig.last_close];
  return shift_bead(psi, m.row, m.k, -1);
}

std::vector<GroupedToken> descending_tokens(const AbacusConfig& psi, int i) {
  const int n = psi.n();
  const int top = psi.max_length() + 1;
  std::vector<GroupedToken> out;
  for (int k = top; k >= 1; --k) {
    std::vector<std::pair<int, int>> closes, opens;  // (slot, row)
    for (int j = 0; j < psi.ell(); ++j) {
      const int b = psi.bead(j, k);
      if (mod(b, n) == mod(i, n)) closes.emplace_back(b, j);
      if (mod(b, n) == mod(i - 1, n)) opens.emplace_back(b, j);
    }
    std::sort(closes.begin(), closes.end());
    std::sort(opens.begin(), opens.end());
    // the last group's ")" cancel against the compact tail
    if (k < top)
      for (auto [b, j] : closes) out.push_back({k, j, false});
    for (auto [b, j] : opens) out.push_back({k, j, true});
  }
  return out;
}

namespace {

Signature grouped_signature(const std::vector<GroupedToken>& tokens) {
  BracketString s;
  for (std::size_t idx = 0; idx < tokens.size(); ++idx)
    s.push_back({tokens[idx].open, static_cast<int>(idx)});
  return signature_reduce(s);
}

void require_descending(const AbacusConfig& psi) {
  if (!is_descending(psi)) throw std::invalid_argument("configuration is not descending");
}

}  // namespace

std::optional<AbacusConfig> f_descending(const AbacusConfig& psi, int i) {
  require_descending(psi);
  auto tokens = descending_tokens(psi, i);
  auto sig = grouped_signature(tokens);
  if (!sig.first_open) return std::nullopt;
  const auto& t = tokens[*sig.first_open];
  return shift_bead(psi, t.row, t.k, 1);
}

std::optional<AbacusConfig> e_descending(const AbacusConfig& psi, int i) {
  require_descending(psi);
  auto tokens = descending_tokens(psi, i);
  auto sig = grouped_signature(tokens);
  if (!sig.last_close) return std::nullopt;
  const auto& t = tokens[*sig.last_close];
  return shift_bead(psi, t.row, t.k, -1);
}

namespace {

// (rightmost column, addable?) for every colour-i ribbon, left to right
std::vector<std::pair<int, bool>> ribbon_positions(const Partition& lambda, int i, int n, int ell) {
  if (n < 1 || ell < 1) throw std::invalid_argument("n and ell must be positive");
  BeadRow row(0, lambda);
  std::vector<std::pair<int, bool>> pos;
  const int len = lambda.length();
  for (int k = 1; k <= len + ell; ++k) {
    const int s = row.bead(k);
    if (!row.occupied(s + ell) && mod(floor_div(s + ell, ell), n) == mod(i, n))
      pos.emplace_back(s + ell, true);
    if (k <= len && !row.occupied(s - ell) && mod(floor_div(s, ell), n) == mod(i, n))
      pos.emplace_back(s, false);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

Signature ribbon_signature(const std::vector<std::pair<int, bool>>& pos) {
  BracketString s;
  for (std::size_t idx = 0; idx < pos.size(); ++idx) s.push_back({pos[idx].second, static_cast<int>(idx)});
  return signature_reduce(s);
}

}  // namespace

std::optional<Partition> f_partition(const Partition& lambda, int i, int n, int ell) {
  auto pos = ribbon_positions(lambda, i, n, ell);
  auto sig = ribbon_signature(pos);
  if (!sig.first_open) return std::nullopt;
  return add_ribbon(lambda, ell, pos[*sig.first_open].first);
}

std::optional<Partition> e_partition(const Partition& lambda, int i, int n, int ell) {
  auto pos = ribbon_positions(lambda, i, n, ell);
  auto sig = ribbon_signature(pos);
  if (!sig.last_close) return std::nullopt;
  return remove_ribbon(lambda, ell, pos[*sig.last_close].first);
}

std::pair<int, int> eps_phi(const AbacusConfig& psi, int i) {
  auto sig = signature_reduce(abacus_brackets(abacus_moves(psi, i)));
  return {sig.uncanceled_close, sig.uncanceled_open};
}

std::pair<int, int> eps_phi(const Partition& lambda, int i, int n, int ell) {
  auto sig = ribbon_signature(ribbon_positions(lambda, i, n, ell));
  return {sig.uncanceled_close, sig.uncanceled_open};
}

AffineWeight wt(const AbacusConfig& psi) {
  AffineWeight w{std::vector<int>(psi.n(), 0)};
  for (int i = 0; i < psi.n(); ++i) {
    auto [e, f] = eps_phi(psi, i);
    w.coeffs[i] = f - e;
  }
  return w;
}

std::vector<long> CrystalGraph::layer_sizes() const {
  std::vector<long> out;
  for (const auto& l : layers) out.push_back(static_cast<long>(l.size()));
  return out;
}

CrystalGraph crystal_graph(const AbacusConfig& psi0, int max_degree) {
  if (!is_compact(psi0) || !is_descending(psi0))
    throw std::invalid_argument("crystal graph needs a compact descending configuration");
  CrystalGraph g;
  if (max_degree < 0) return g;
  g.layers.push_back({psi0});
  for (int d = 0; d < max_degree; ++d) {
    std::map<std::string, AbacusConfig> next;
    struct Pending { int from; int color; std::string to; };
    std::vector<Pending> pending;
    const auto& layer = g.layers[d];
    for (int a = 0; a < static_cast<int>(layer.size()); ++a)
      for (int i = 0; i < psi0.n(); ++i) {
        auto y = f_descending(layer[a], i);
        if (!y || !is_tight(*y)) continue;
        auto key = y->key();
        pending.push_back({a, i, key});
        next.emplace(std::move(key), std::move(*y));
      }
    std::map<std::string, int> index;
    std::vector<AbacusConfig> nodes;
    for (auto& [key, cfg] : next) {
      index.emplace(key, static_cast<int>(nodes.size()));
      nodes.push_back(cfg);
    }
    for (const auto& p : pending) g.edges.push_back({d, p.from, index.at(p.to), p.color});
    g.layers.push_back(std::move(nodes));
  }
  return g;
}

}  // namespace affcrystal
