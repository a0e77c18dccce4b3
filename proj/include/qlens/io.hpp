#pragma once

#include <string>

#include <json.hpp>

#include "qlens/classify.hpp"
#include "qlens/equivalence.hpp"
#include "qlens/invariants.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/pathmatrix.hpp"

namespace qlens {

/// Path matrix with its parameters:
///   {"r": 5, "m": [1,2,1], "n": 3, "entries": [["1","5","15"], ...]}
/// Entries are decimal strings, row-major, full square including zeros.
nlohmann::json matrix_to_json(const LensParams& params, const PathMatrix& m);
/// Inverse of matrix_to_json; throws Error(ParseError) on schema violations.
std::pair<LensParams, PathMatrix> matrix_from_json(const nlohmann::json& j);

/// One line per row, comma-separated decimals, same ordering as the JSON.
std::string matrix_to_csv(const PathMatrix& m);

/// {"U": [["1","0"],...], "V": [...]}, decimal-string entries.
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// {"primes": [3, 7], "windows": [[2, 1], []]}
nlohmann::json signature_to_json(const Signature& s);
Signature signature_from_json(const nlohmann::json& j);

/// {"r", "n", "phi", "lower_bound",
///  "classes": [{"representative_m", "size", "matrix_count", "signature",
///               "matrix_digest"}]}
nlohmann::json partition_to_json(const ClassPartition& p);
ClassPartition partition_from_json(const nlohmann::json& j);

nlohmann::json decision_to_json(const EquivDecision& d);
nlohmann::json report_to_json(const ConjectureReport& r);

}  // namespace qlens
