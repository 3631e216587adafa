#pragma once

#include <string>

#include <json.hpp>

#include "gtmm/bounds.hpp"
#include "gtmm/matmul.hpp"
#include "gtmm/properties.hpp"
#include "gtmm/puzzles.hpp"

namespace gtmm {

using nlohmann::json;

// Group specs:
//   {"type":"abelian","moduli":[...]}
//   {"type":"sym","n":k}
//   {"type":"wreath","base":{abelian},"index":k}  or  ...,"triangle":n}
//   {"type":"product","parts":[spec,spec]}
json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const json& j);

// Elements: abelian = array of ints; permutation = one-line array (0-based);
// wreath = {"h": [[...], ...], "pi": [...]} in the pi·f normal form.
json element_to_json(const GroupSpec& spec, const GroupElement& e);
GroupElement element_from_json(const GroupSpec& spec, const json& j);

// Subset containers:
//   triple: {"group": spec, "S1": [...], "S2": [...], "S3": [...]}
//   pair family: {"group": spec, "pairs": [{"A": [...], "B": [...]}, ...]}
//   triple family: {"group": spec, "triples": [{"A":..., "B":..., "C":...}]}
json triple_to_json(const SubsetTriple& t);
SubsetTriple triple_from_json(const json& j);
json pair_family_to_json(const SubsetPairFamily& f);
SubsetPairFamily pair_family_from_json(const json& j);
json triple_family_to_json(const SubsetTripleFamily& f);
SubsetTripleFamily triple_family_from_json(const json& j);

// Charts: {"group": {abelian}, "symbols": [...], "A": {"1": [...]}, ...}
json chart_to_json(const Chart& c);
Chart chart_from_json(const json& j);

json witness_to_json(const GroupSpec* spec, const Witness& w);

json bound_to_json(const OmegaBound& b);

// CSV integer matrices: one row per line, comma separated.
IntMatrix matrix_from_csv(const std::string& text);
std::string matrix_to_csv(const IntMatrix& m);

/// Nearest double to `v` with 12 significant decimal digits; all floats in
/// reports go through this so runs diff cleanly.
double round_sig12(double v);
json rounded(double v);

} // namespace gtmm
