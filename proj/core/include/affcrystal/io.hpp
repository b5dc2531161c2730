#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "affcrystal/abacus.hpp"
#include "affcrystal/cylindric.hpp"
#include "affcrystal/kyoto.hpp"

namespace affcrystal {

// malformed input (wrong shape, wrong types, bad syntax)
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// well-formed input that breaks an invariant
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const ChargedPartition& p);
json to_json(const AbacusConfig& psi);
json to_json(const CylindricPlanePartition& pi);
json to_json(const PerfectElem& b);
json to_json(const Path& p);

Partition partition_from_json(const json& j);
ChargedPartition charged_from_json(const json& j);
AbacusConfig abacus_from_json(const json& j);
CylindricPlanePartition cpp_from_json(const json& j);
PerfectElem perfect_from_json(const json& j, int n, int ell);
Path path_from_json(const json& j, int ell);

// "2*L0+3*L1+L2"
DominantWeight parse_weight(const std::string& text, int n);

}  // namespace affcrystal
