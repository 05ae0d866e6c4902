#pragma once

#include "weilrep/cyc_matrix.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace weilrep {

using Json = nlohmann::ordered_json;

/// {"conductor": n, "coeffs": [["num","den"], ...]} with phi(n) entries and
/// decimal-string integers; round-trips bit-exactly.
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

/// Top-level artifact wrapper: {"schema": "weilrep/1", "object": ..., ...}.
Json artifact(const std::string& object, Json params, Json data);

std::string dump_deterministic(const Json& j);

}  // namespace weilrep
