#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symmono/functionals.hpp"
#include "symmono/observables.hpp"

namespace symmono {

using json = nlohmann::json;

// 12 significant digits, '.' decimal point, "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double x);
// x rounded to 12 significant digits (non-finite values pass through).
double round12(double x);
json number_json(double x);

// FNV-1a 64 over dims and the amplitudes printed to 17 significant digits.
std::string state_digest(const MultipartiteState& psi);

// "ghz:L,K", "unit:R,K", "w:K", "random:D1,D2,...", "product:D1,D2,...", "schmidt:p1,p2,..."
// or a JSON file path. Files hold {"dims":[...], "amplitudes":[x | [re,im], ...]} or
// {"name":"ghz", "params":{"level":2,"parties":3}, "seed":7}. Param keys: ghz level/parties,
// unit rank/parties, w parties, random and product dims, schmidt coefficients.
MultipartiteState parse_state(const std::string& text, std::uint64_t seed = 0);
MultipartiteState state_from_json(const json& j, std::uint64_t seed = 0);
json state_to_json(const MultipartiteState& psi);

// {"t":0.5,"left":…,"right":…} with leaves {"leaf":"1|23"}; leaves are numbered depth first.
struct ParsedTree {
  std::vector<Bipartition> leaves;
  GMeanTree tree;
};
ParsedTree parse_tree(const json& j, int parties);
FamilySpec family_from_tree(const ParsedTree& t);

json to_json(const FunctionalReport& r);
json to_json(const AxiomReport& r);
json to_json(const LowerFunctionalResult& r);

}  // namespace symmono
