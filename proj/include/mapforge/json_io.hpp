#pragma once

#include "mapforge/graph.hpp"
#include "mapforge/map.hpp"
#include "mapforge/numbers.hpp"
#include "mapforge/poly.hpp"
#include "mapforge/voltage.hpp"

#include "json.hpp"

#include <string>
#include <utility>

namespace mapforge {

// All writers use ordered_json with a fixed key order so serialized output is
// byte-deterministic.
using json = nlohmann::ordered_json;

// {"vertices": n, "edges": [[u, v], ...]}
json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const json& j);

// {"edges": m, "P": [ ... 4m cell images ... ]}
json map_to_json(const CombMap& M);
CombMap map_from_json(const json& j);
// parses the shape without checking the map axioms (for the validate verb)
CombMap map_from_json_unchecked(const json& j);

// {"group": {"order": n, "table": [[...], ...]}, "theta": [ ... ]};
// the reader also accepts the shorthand {"group": {"cyclic": N}, ...}
json voltage_to_json(const FinGroupTable& G, const VoltageAssignment& theta);
std::pair<FinGroupTable, VoltageAssignment> voltage_from_json(const json& j);

json group_to_json(const FinGroupTable& G);
FinGroupTable group_from_json(const json& j);

// {"v", "e", "f", "chi", "orientable", "genus"} in that order
json invariants_to_json(const MapInvariants& inv);

// integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond that; rationals with denominator 1 collapse to the
// integer form, others become "p/q" strings
json bigint_to_json(const BigInt& v);
json bigrat_to_json(const BigRat& q);
BigInt bigint_from_json(const json& j);

// {"coeffs": {"<exponent>": coefficient, ...}} with exponents ascending
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// file round-trip with path-qualified parse errors
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j, bool pretty = false);
std::string dump_json(const json& j, bool pretty = false);

} // namespace mapforge
