#pragma once

// JSON and CSV surfaces shared by the CLI and the tests.

#include <string>
#include <vector>

#include "json.hpp"
#include "ljmod/cyclotomic.hpp"
#include "ljmod/finite_field.hpp"
#include "ljmod/segcomb.hpp"

namespace ljmod::io {

// {"period": e, "segments": [{"start": s, "len": r, "weight": w}, ...]}
nlohmann::ordered_json to_json(const segcomb::Multisegment& a);
segcomb::Multisegment multisegment_from_json(const nlohmann::json& j);

// {"d", "epsilon", "count", "multisegments": [...]}
std::string block_listing(int d, int epsilon, const std::vector<segcomb::Multisegment>& block);

// {"l": l, "m": m, "modulus": [...], "rows": [[entry, ...], ...]} where an
// entry is a coefficient vector (constant term first) or, for m = 1, a
// plain integer. "modulus" may be omitted to use the default one.
FieldMatrix field_matrix_from_json(const std::string& text);

// {"conductor": N, "coeffs": [...], "reduction": [...]}
std::string brauer_trace_json(const Cyclotomic& trace, const FiniteField& field, FieldElem reduction);

}  // namespace ljmod::io
