#pragma once

#include <string>

#include <json.hpp>

#include "lukra/algebra.hpp"
#include "lukra/fo.hpp"
#include "lukra/free_algebra.hpp"
#include "lukra/logic.hpp"

namespace lukra {

using json = nlohmann::json;

// {"size", "top", "bottom", "imp": [[...]], "delta", "label"}; absent Δ or
// bottom is null.
json algebra_to_json(const FiniteAlgebra& a);
// Throws InvalidArgument on malformed input.
FiniteAlgebra algebra_from_json(const json& j);

// Numbers when they fit in 64 bits, strings otherwise.
json bigint_to_json(const BigInt& v);

json report_to_json(const CheckReport& r);
json size_to_json(const SizeBreakdown& s);
json counterexample_to_json(const Counterexample& c);

// {"algebra": {...} | "chain": k, "domain": d,
//  "predicates": {"P": {"arity": a, "table": [...]}}, "functions": {...}}
fo::Structure structure_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace lukra
