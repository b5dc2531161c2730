#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "affcrystal/affcrystal.hpp"

using namespace affcrystal;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;

// shared flags; -1 means "not given"
struct Options {
  int n = -1;
  int ell = -1;
  std::string weight;
  int max_degree = 20;
  int nmax = -1;
  std::string format = "json";
  int rotate = 0;
  std::string from = "abacus";
  std::string to = "cpp";
  std::string input = "-";
  std::string kind;
  std::string series = "rep";
  bool mutate = false;
  bool tight_only = false;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int need(int value, const char* flag) {
  if (value < 0) throw ValidationError(std::string(flag) + " is required here");
  return value;
}

DominantWeight weight_from(const Options& o) {
  const int n = need(o.n, "--n");
  if (n < 2) throw ValidationError("--n must be at least 2");
  auto w = parse_weight(o.weight, n);
  if (w.level() < 1) throw ValidationError("weight must have positive level");
  if (o.ell >= 0 && o.ell != w.level()) throw ValidationError("--ell does not match the level of --weight");
  return w;
}

// every model goes through the abacus
AbacusConfig to_hub(const std::string& model, const json& j, const Options& o) {
  if (model == "abacus") return abacus_from_json(j);
  if (model == "cpp") {
    auto pi = cpp_from_json(j);
    return to_abacus(o.rotate ? rotate_colors(pi, -o.rotate) : pi);
  }
  if (model == "partition") {
    const int n = need(o.n, "--n");
    const int ell = o.ell < 0 ? 1 : o.ell;
    if (n < 1 || ell < 1) throw ValidationError("--n and --ell must be positive");
    ChargedPartition c = j.is_array() ? ChargedPartition{0, partition_from_json(j)} : charged_from_json(j);
    return AbacusConfig(n, split_row(BeadRow(c.charge, c.partition), ell));
  }
  if (model == "path") {
    if (!j.is_object() || !j.contains("weight") || !j["weight"].is_array()) throw ParseError("path needs a weight array");
    int level = 0;
    for (const auto& m : j["weight"]) level += m.is_number_integer() ? m.get<int>() : 0;
    auto p = path_from_json(j, level);
    return J_inverse(p, compact_config(p.weight));
  }
  throw ParseError("unknown model " + model);
}

std::string from_hub(const std::string& model, const AbacusConfig& psi, const Options& o) {
  if (model == "abacus") return to_json(psi).dump();
  if (model == "cpp") {
    if (!is_descending(psi)) throw ValidationError("configuration is not descending");
    auto pi = from_abacus(psi);
    if (o.rotate) pi = rotate_colors(pi, o.rotate);
    return o.format == "text" ? render_text(pi) : to_json(pi).dump();
  }
  if (model == "partition") {
    auto row = to_bead_row(psi);
    if (row.charge() == 0) return to_json(row.partition()).dump();
    return to_json(ChargedPartition{row.charge(), row.partition()}).dump();
  }
  if (model == "path") {
    if (!is_descending(psi) || !is_tight(psi)) throw ValidationError("path model needs a tight descending configuration");
    return to_json(J(psi)).dump();
  }
  throw ParseError("unknown model " + model);
}

int cmd_convert(const Options& o) {
  auto psi = to_hub(o.from, read_json(o.input), o);
  auto out = from_hub(o.to, psi, o);
  std::cout << out << (out.ends_with('\n') ? "" : "\n");
  return 0;
}

AbacusConfig source_config(const Options& o) {
  if (!o.weight.empty()) return compact_config(weight_from(o));
  auto psi0 = abacus_from_json(read_json(o.input));
  if (!is_compact(psi0) || !is_descending(psi0)) throw ValidationError("need a compact descending configuration");
  return psi0;
}

int cmd_graph(const Options& o) {
  auto psi0 = source_config(o);
  auto g = crystal_graph(psi0, o.max_degree);
  auto edges = g.edges;
  auto key_of = [&](int degree, int idx) { return g.layers[degree][idx].key(); };
  std::sort(edges.begin(), edges.end(), [&](const CrystalEdge& a, const CrystalEdge& b) {
    return std::tuple(a.degree, key_of(a.degree, a.from), a.color, key_of(a.degree + 1, a.to)) <
           std::tuple(b.degree, key_of(b.degree, b.from), b.color, key_of(b.degree + 1, b.to));
  });
  if (o.format == "json") {
    json nodes = json::array(), arcs = json::array();
    for (std::size_t d = 0; d < g.layers.size(); ++d)
      for (const auto& psi : g.layers[d])
        nodes.push_back({{"id", psi.key()}, {"degree", d}, {"config", to_json(psi)}});
    for (const auto& e : edges)
      arcs.push_back({{"from", key_of(e.degree, e.from)}, {"to", key_of(e.degree + 1, e.to)}, {"color", e.color}});
    std::cout << json{{"n", psi0.n()},
                      {"ell", psi0.ell()},
                      {"weight", to_string(highest_weight(psi0))},
                      {"layer_sizes", g.layer_sizes()},
                      {"nodes", nodes},
                      {"edges", arcs}}
                     .dump(1)
              << "\n";
  } else if (o.format == "dot") {
    std::cout << "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t d = 0; d < g.layers.size(); ++d) {
      std::cout << "  { rank=same;";
      for (const auto& psi : g.layers[d]) std::cout << " \"" << psi.key() << "\";";
      std::cout << " }  // degree " << d << "\n";
    }
    for (const auto& e : edges)
      std::cout << "  \"" << key_of(e.degree, e.from) << "\" -> \"" << key_of(e.degree + 1, e.to) << "\" [label=\""
                << e.color << "\"];\n";
    std::cout << "}\n";
  } else {
    throw ValidationError("graph format must be dot or json");
  }
  return 0;
}

int cmd_series(const Options& o) {
  const int top = o.nmax < 0 ? 20 : o.nmax;
  auto psi0 = source_config(o);
  auto w = highest_weight(psi0);
  QSeries s(top);
  if (o.series == "rep") s = Z_rep(w, top);
  else if (o.series == "borodin") s = Z_borodin(boundary_of(w), top, o.mutate ? Residue::absolute_difference : Residue::smallest_nonnegative);
  else if (o.series == "brute") s = Z_bruteforce(psi0, top);
  else if (o.series == "dimq") s = dimq_crystal(w, top);
  else throw ValidationError("series must be rep, borodin, brute or dimq");
  std::cout << to_lines(s);
  return 0;
}

int cmd_enumerate(const Options& o) {
  auto psi0 = source_config(o);
  const int top = o.nmax < 0 ? o.max_degree : o.nmax;
  auto layers = enumerate_descending(psi0, top);
  for (std::size_t d = 0; d < layers.size(); ++d) {
    auto layer = layers[d];
    std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
    for (const auto& psi : layer) {
      if (o.tight_only && !is_tight(psi)) continue;
      std::cout << json{{"degree", d}, {o.to, json::parse(from_hub(o.to, psi, o))}}.dump() << "\n";
    }
  }
  return 0;
}

// --- verify: each check prints one summary line or its first counterexample

struct Report {
  std::optional<std::string> failure;
  std::size_t checked = 0;
  void fail(std::string msg) {
    if (!failure) failure = std::move(msg);
  }
};

std::vector<DominantWeight> weights_for(const Options& o) {
  if (!o.weight.empty()) return {weight_from(o)};
  return dominant_weights(need(o.n, "--n"), need(o.ell, "--ell"));
}

std::string show(const std::optional<AbacusConfig>& x) { return x ? x->key() : "0"; }

Report verify_tk_commute(const Options& o, int top) {
  Report r;
  for (const auto& w : weights_for(o))
    for (const auto& layer : enumerate_descending(compact_config(w), top))
      for (const auto& psi : layer)
        for (int k = 1; k <= psi.max_length() + 2; ++k)
          for (int i = 0; i < w.n(); ++i) {
            auto t = tighten(psi, k);
            auto f = f_descending(psi, i);
            auto lhs = t ? f_descending(*t, i) : std::nullopt;
            auto rhs = f ? tighten(*f, k) : std::nullopt;
            ++r.checked;
            if (lhs != rhs)
              r.fail("f_" + std::to_string(i) + " T_" + std::to_string(k) + " at " + psi.key() + ": " + show(lhs) +
                     " vs " + show(rhs));
          }
  return r;
}

Report verify_gglemma(const Options& o, int top) {
  Report r;
  for (const auto& w : weights_for(o)) {
    auto psi0 = compact_config(w);
    std::set<AbacusConfig> sources, orbit{psi0}, tight, component;
    for (const auto& layer : enumerate_descending(psi0, top))
      for (const auto& psi : layer) {
        bool source = true;
        for (int i = 0; i < w.n(); ++i) source = source && !e_descending(psi, i);
        if (source) sources.insert(psi);
        if (is_tight(psi)) tight.insert(psi);
        ++r.checked;
      }
    std::vector<AbacusConfig> frontier{psi0};
    while (!frontier.empty()) {
      auto psi = frontier.back();
      frontier.pop_back();
      for (int k = 1; k <= psi.max_length() + 1; ++k)
        if (auto up = loosen(psi, k); up && weight(*up) <= top && orbit.insert(*up).second) frontier.push_back(*up);
    }
    for (const auto& layer : crystal_graph(psi0, top).layers) component.insert(layer.begin(), layer.end());
    if (sources != orbit) r.fail("sources differ from the loosening orbit of " + to_string(w));
    if (tight != component) r.fail("tight configurations differ from the component of " + to_string(w));
  }
  return r;
}

Report verify_bijection(const Options& o, int top) {
  Report r;
  for (const auto& w : weights_for(o)) {
    auto psi0 = compact_config(w);
    auto g = crystal_graph(psi0, top);
    std::map<AbacusConfig, int> degree;
    for (std::size_t d = 0; d < g.layers.size(); ++d)
      for (const auto& x : g.layers[d]) degree[x] = static_cast<int>(d);
    std::set<std::pair<AbacusConfig, Partition>> images;
    for (const auto& layer : enumerate_descending(psi0, top))
      for (const auto& psi : layer) {
        ++r.checked;
        auto pi = from_abacus(psi);
        if (!is_valid_cpp(pi) || to_abacus(pi) != psi || cpp_weight(pi) != weight(psi))
          r.fail("abacus/cpp roundtrip fails at " + psi.key());
        auto gp = gamma(psi);
        auto lam = lambda_part(psi);
        auto it = degree.find(gp);
        if (it == degree.end() || weight(psi) != it->second + w.n() * lam.size() || recombine(gp, lam) != psi ||
            !images.insert({gp, lam}).second)
          r.fail("(gamma, lambda) decomposition fails at " + psi.key());
      }
  }
  return r;
}

Report series_report(const QSeries& lhs, const QSeries& rhs, const std::string& what) {
  Report r;
  r.checked = lhs.coeffs().size();
  if (auto d = lhs.first_mismatch(rhs))
    r.fail(what + ": first mismatch at q^" + std::to_string(*d) + ": " + lhs[*d].str() + " vs " + rhs[*d].str());
  return r;
}

Report verify_three_way(const Options& o, int top) {
  Report total;
  for (const auto& w : weights_for(o)) {
    auto rep = Z_rep(w, top);
    auto bor = Z_borodin(boundary_of(w), top, o.mutate ? Residue::absolute_difference : Residue::smallest_nonnegative);
    auto brute = Z_bruteforce(compact_config(w), top);
    for (auto r : {series_report(rep, bor, "Z_rep vs Z_borodin for " + to_string(w)),
                   series_report(rep, brute, "Z_rep vs Z_bruteforce for " + to_string(w))}) {
      total.checked += r.checked;
      if (r.failure) total.fail(*r.failure);
    }
  }
  return total;
}

Report verify_rank_level(const Options& o, int top) {
  Report total;
  for (const auto& w : weights_for(o)) {
    auto c = check_rank_level(w, top);
    auto r = series_report(c.lhs, c.rhs, to_string(w) + " vs " + to_string(dual_weight(w)));
    total.checked += r.checked;
    if (r.failure) total.fail(*r.failure);
  }
  return total;
}

Report verify_level_one(const Options& o, int top) {
  Report total;
  const int n = need(o.n, "--n");
  for (int i = 0; i < n; ++i) {
    DominantWeight w{std::vector<int>(n, 0)};
    w.coeffs[i] = 1;
    auto r = series_report(Z_rep(w, top), euler_inverse(1, top), "level one " + to_string(w));
    total.checked += r.checked;
    if (r.failure) total.fail(*r.failure);
  }
  return total;
}

Report verify_kyoto(const Options& o, int top) {
  Report r;
  for (const auto& w : weights_for(o)) {
    auto psi0 = compact_config(w);
    if (J(psi0) != ground_state_path(w)) r.fail("J of the compact configuration is not the ground state path");
    for (const auto& layer : crystal_graph(psi0, top).layers)
      for (const auto& psi : layer) {
        auto p = J(psi);
        for (int i = 0; i < w.n(); ++i) {
          ++r.checked;
          auto f = f_descending(psi, i);
          auto fp = f_path(p, i);
          if (f.has_value() != fp.has_value() || (f && J(*f) != *fp))
            r.fail("f_" + std::to_string(i) + " does not intertwine at " + psi.key());
          auto e = e_descending(psi, i);
          auto ep = e_path(p, i);
          if (e.has_value() != ep.has_value() || (e && J(*e) != *ep))
            r.fail("e_" + std::to_string(i) + " does not intertwine at " + psi.key());
        }
      }
  }
  return r;
}

int cmd_verify(const Options& o) {
  using Check = Report (*)(const Options&, int);
  const std::map<std::string, Check> kinds = {
      {"gglemma", verify_gglemma},     {"tk-commute", verify_tk_commute}, {"bijection", verify_bijection},
      {"three-way-Z", verify_three_way}, {"rank-level", verify_rank_level}, {"level-one", verify_level_one},
      {"kyoto", verify_kyoto},
  };
  auto it = kinds.find(o.kind);
  if (it == kinds.end()) throw ValidationError("unknown check " + o.kind);
  const int top = o.nmax < 0 ? 20 : o.nmax;
  auto r = it->second(o, top);
  if (r.failure) {
    std::cout << "FAIL " << o.kind << ": " << *r.failure << "\n";
    return kExitFailed;
  }
  std::cout << "OK " << o.kind << " through degree " << top << " (" << r.checked << " checks)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine crystal combinatorics: partitions, abacus configurations, cylindric plane partitions"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank parameter n (colours 0..n-1)");
    sub->add_option("--ell", o.ell, "number of abacus rows / level");
    sub->add_option("--weight", o.weight, "dominant weight such as 2*L0+L1");
  };

  auto* convert = app.add_subcommand("convert", "convert between partition, abacus, cpp and path");
  add_common(convert);
  convert->add_option("--from", o.from, "input model")->check(CLI::IsMember({"partition", "abacus", "cpp", "path"}));
  convert->add_option("--to", o.to, "output model")->check(CLI::IsMember({"partition", "abacus", "cpp", "path"}));
  convert->add_option("--format", o.format, "json or text (cpp only)")->check(CLI::IsMember({"json", "text"}));
  convert->add_option("--rotate-colors", o.rotate, "relabel cpp colours c -> c + k");
  convert->add_option("input", o.input, "input file, - for stdin");

  auto* graph = app.add_subcommand("graph", "crystal graph of a highest weight");
  add_common(graph);
  graph->add_option("--max-degree", o.max_degree, "largest principal degree")->check(CLI::NonNegativeNumber);
  graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("input", o.input, "compact abacus JSON when --weight is absent");

  auto* series = app.add_subcommand("series", "q-series of a highest weight, one 'k<TAB>coeff' line per degree");
  add_common(series);
  series->add_option("--nmax", o.nmax, "truncation degree (default 20)")->check(CLI::NonNegativeNumber);
  series->add_option("--kind", o.series, "rep, borodin, brute or dimq")
      ->check(CLI::IsMember({"rep", "borodin", "brute", "dimq"}));
  series->add_flag("--mutate", o.mutate, "use the |i-j| residue in the borodin product");
  series->add_option("input", o.input, "compact abacus JSON when --weight is absent");

  auto* verify = app.add_subcommand("verify", "run an identity or property check; nonzero exit on failure");
  add_common(verify);
  verify->add_option("kind", o.kind, "gglemma, tk-commute, bijection, three-way-Z, rank-level, level-one, kyoto")
      ->required();
  verify->add_option("--nmax,--max-degree", o.nmax, "degree bound (default 20)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--mutate", o.mutate, "inject the |i-j| residue into the borodin product");

  auto* enumerate = app.add_subcommand("enumerate", "list descending configurations by weight, one JSON object per line");
  add_common(enumerate);
  enumerate->add_option("--max-degree,--nmax", o.nmax, "largest weight (default 20)")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--to", o.to, "output model")->check(CLI::IsMember({"partition", "abacus", "cpp", "path"}));
  enumerate->add_flag("--tight", o.tight_only, "only tight configurations");
  enumerate->add_option("--rotate-colors", o.rotate, "relabel cpp colours c -> c + k");
  enumerate->add_option("input", o.input, "compact abacus JSON when --weight is absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*convert) return cmd_convert(o);
    if (*graph) return cmd_graph(o);
    if (*series) return cmd_series(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitFailed;
}
