#include "affcrystal/kyoto.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace affcrystal {

std::optional<PerfectElem> f_perfect(const PerfectElem& b, int i, int n) {
  i = mod(i, n);
  auto e = b.entries;
  if (i == 0) {
    if (e.empty() || e.back() != n - 1) return std::nullopt;
    e.pop_back();
    e.insert(e.begin(), 0);
  } else {
    auto it = std::find(e.rbegin(), e.rend(), i - 1);
    if (it == e.rend()) return std::nullopt;
    *it = i;
  }
  return PerfectElem{std::move(e)};
}

std::optional<PerfectElem> e_perfect(const PerfectElem& b, int i, int n) {
  i = mod(i, n);
  auto e = b.entries;
  if (i == 0) {
    if (e.empty() || e.front() != 0) return std::nullopt;
    e.erase(e.begin());
    e.push_back(n - 1);
  } else {
    auto it = std::find(e.begin(), e.end(), i);
    if (it == e.end()) return std::nullopt;
    *it = i - 1;
  }
  return PerfectElem{std::move(e)};
}

std::pair<DominantWeight, DominantWeight> eps_phi_perfect(const PerfectElem& b, int n) {
  DominantWeight eps{std::vector<int>(n, 0)}, phi{std::vector<int>(n, 0)};
  for (int i = 0; i < n; ++i) {
    auto [e, f] = eps_phi_by_iteration(
        b, [&](const PerfectElem& x) { return e_perfect(x, i, n); },
        [&](const PerfectElem& x) { return f_perfect(x, i, n); });
    eps.coeffs[i] = e;
    phi.coeffs[i] = f;
  }
  return {eps, phi};
}

std::vector<PerfectElem> perfect_crystal(int n, int ell) {
  std::vector<PerfectElem> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == ell) {
      out.push_back({cur});
      return;
    }
    for (int v = lo; v < n; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

PerfectElem ground_element(const DominantWeight& w, int k) {
  const int n = w.n();
  PerfectElem b;
  for (int s = 0; s < n; ++s) b.entries.insert(b.entries.end(), w.coeffs[mod(s + k, n)], s);
  return b;
}

Path ground_state_path(const DominantWeight& w) {
  if (w.n() < 2 || w.level() < 1) throw std::invalid_argument("weight must have n >= 2 and positive level");
  auto [eps, phi] = eps_phi_perfect(ground_element(w, 1), w.n());
  if (phi != w) throw std::logic_error("ground element does not have phi = weight");
  return Path{w, {}};
}

PerfectElem element_at(const Path& p, int k) {
  auto it = p.deviations.find(k);
  return it != p.deviations.end() ? it->second : ground_element(p.weight, k);
}

Path pruned(Path p) {
  std::erase_if(p.deviations, [&](const auto& kv) { return kv.second == ground_element(p.weight, kv.first); });
  return p;
}

int path_extent(const Path& p) { return p.deviations.empty() ? 1 : p.deviations.rbegin()->first + 1; }

std::vector<PathToken> path_tokens(const Path& p, int i) {
  const int n = p.weight.n();
  const int top = path_extent(p);
  std::vector<PathToken> out;
  for (int k = top; k >= 1; --k) {
    const auto b = element_at(p, k);
    const int eps = static_cast<int>(std::count(b.entries.begin(), b.entries.end(), mod(i, n)));
    const int phi = static_cast<int>(std::count(b.entries.begin(), b.entries.end(), mod(i - 1, n)));
    if (k < top) out.insert(out.end(), eps, PathToken{k, false});
    out.insert(out.end(), phi, PathToken{k, true});
  }
  return out;
}

namespace {

Signature path_signature(const std::vector<PathToken>& tokens) {
  BracketString s;
  for (std::size_t idx = 0; idx < tokens.size(); ++idx) s.push_back({tokens[idx].open, static_cast<int>(idx)});
  return signature_reduce(s);
}

Path replace_at(const Path& p, int k, PerfectElem b) {
  Path out = p;
  out.deviations[k] = std::move(b);
  return pruned(std::move(out));
}

}  // namespace

std::optional<Path> f_path(const Path& p, int i) {
  auto tokens = path_tokens(p, i);
  auto sig = path_signature(tokens);
  if (!sig.first_open) return std::nullopt;
  const int k = tokens[*sig.first_open].k;
  auto b = f_perfect(element_at(p, k), i, p.weight.n());
  if (!b) throw std::logic_error("uncanceled bracket without an f move");
  return replace_at(p, k, std::move(*b));
}

std::optional<Path> e_path(const Path& p, int i) {
  auto tokens = path_tokens(p, i);
  auto sig = path_signature(tokens);
  if (!sig.last_close) return std::nullopt;
  const int k = tokens[*sig.last_close].k;
  auto b = e_perfect(element_at(p, k), i, p.weight.n());
  if (!b) throw std::logic_error("uncanceled bracket without an e move");
  return replace_at(p, k, std::move(*b));
}

Path J(const AbacusConfig& psi) {
  if (!is_descending(psi) || !is_tight(psi)) throw std::invalid_argument("J needs a tight descending configuration");
  Path p{highest_weight(compactify(psi)), {}};
  const int top = psi.max_length() + 1;
  for (int k = 1; k <= top; ++k) {
    PerfectElem b;
    for (int j = 0; j < psi.ell(); ++j) b.entries.push_back(mod(psi.bead(j, k), psi.n()));
    std::sort(b.entries.begin(), b.entries.end());
    p.deviations.emplace(k, std::move(b));
  }
  return pruned(std::move(p));
}

AbacusConfig J_inverse(const Path& p, const AbacusConfig& psi0) {
  if (highest_weight(psi0) != p.weight) throw std::invalid_argument("path weight does not match the compact configuration");
  std::vector<int> colors;
  Path cur = pruned(p);
  for (;;) {
    bool moved = false;
    for (int i = 0; i < p.weight.n() && !moved; ++i)
      if (auto q = e_path(cur, i)) {
        cur = std::move(*q);
        colors.push_back(i);
        moved = true;
      }
    if (!moved) break;
  }
  if (!cur.deviations.empty()) throw std::invalid_argument("path is not in the component of the ground state path");
  AbacusConfig psi = psi0;
  for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
    auto next = f_descending(psi, *it);
    if (!next) throw std::logic_error("J_inverse: f_i vanished on the abacus side");
    psi = std::move(*next);
  }
  return psi;
}

}  // namespace affcrystal
