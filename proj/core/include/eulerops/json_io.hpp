#pragma once

#include <nlohmann/json.hpp>

#include "eulerops/diff_op.hpp"
#include "eulerops/fiber_poly.hpp"
#include "eulerops/symbol_poly.hpp"

namespace eulerops {

// Term-record serialization. Every document carries "kind", "model" and the
// canonical "text" rendering next to the term list; see docs/json-format.md.
//
//   function: {"baseExp": [..], "fiberExp": [..], "coeff": "3/2"}
//   operator: {"alpha": [..], "beta": [..], "coeff": "<function rendering>"}
//   symbol:   {"xExp": [..], "xiExp": [..], "pExp": [..], "thetaExp": [..], "coeff": "-2"}

nlohmann::json to_json(const FiberPoly& u);
nlohmann::json to_json(const DiffOp& op);
nlohmann::json to_json(const SymbolPoly& s);

// Throw ParseError / ModelMismatchError on malformed documents.
FiberPoly function_from_json(const nlohmann::json& doc);
DiffOp operator_from_json(const nlohmann::json& doc);
SymbolPoly symbol_from_json(const nlohmann::json& doc);

}  // namespace eulerops
