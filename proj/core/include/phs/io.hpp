#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "phs/borel.hpp"
#include "phs/convergence.hpp"
#include "phs/ray.hpp"
#include "phs/topology.hpp"

namespace phs::io {

using nlohmann::json;

// State vectors: {"dim": n, "components": [[re, im], ...]}.
json to_json(const StateVector& v);
StateVector vector_from_json(const json& j);

// Rays serialize as their canonical representative plus a marker.
json to_json(const Ray& r);

// CSV with header "index,re,im".
std::string to_csv(const StateVector& v);
StateVector vector_from_csv(const std::string& text);

// Dense Hermitian matrices: {"dim": n, "entries": [[re, im], ...]} row-major.
json to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const json& j);

// Sequences: {"dim": n, "label": ..., "states": [components, ...]}.
json to_json(const StateSequence& seq);
StateSequence sequence_from_json(const json& j);

json to_json(const MembershipReport& r);
json to_json(const TopologyVerdict& v);
json to_json(const ConvergenceReport& r);
json to_json(const FinitePartition& p);
json to_json(const MisraResult& r);
json to_json(const CompletenessResult& r);

/// Parse a file as JSON; throws ParseError with the path on failure.
json load_json_file(const std::string& path);

/// Read a whole text file; throws ParseError when unreadable.
std::string load_text_file(const std::string& path);

/// Write text (creating/truncating); throws ParseError when unwritable.
void save_text_file(const std::string& path, const std::string& content);

}  // namespace phs::io
