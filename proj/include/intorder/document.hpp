#pragma once

#include <nlohmann/json.hpp>

#include "intorder/activity.hpp"

namespace intorder {

/// Matroid input document:
///   {
///     "type": "bases" | "matrix" | "graph" | "uniform",
///     ... type payload ...,
///     "modifiers": [{"op":"dual"} | {"op":"delete","set":[..]} | {"op":"contract","set":[..]}],
///     "order": [e1,...,en]            // optional; e1 smallest; identity if omitted
///   }
/// Payloads: bases -> "n", "bases": [[..]]; matrix -> "rows" of integers or
/// "p/q" strings; graph -> "vertices", "edges": [[u,v]..]; uniform -> "r","n".
/// Modifier sets refer to the labels current at that point in the chain;
/// "order" refers to the final ground set.
///
/// Throws schema_error on malformed input; matroid construction errors
/// (axiom violations) propagate unchanged.

/// Structural validation; returns normalized copy with defaults filled in.
nlohmann::json validate_document(const nlohmann::json& doc);

Matroid build_matroid(const nlohmann::json& doc);
OrderedMatroid build_document(const nlohmann::json& doc);

}  // namespace intorder
