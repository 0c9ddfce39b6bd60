#pragma once

#include <string>

#include <json.hpp>

#include "govlab/closed_form.hpp"
#include "govlab/cycles.hpp"
#include "govlab/dynamics.hpp"
#include "govlab/genealogy.hpp"
#include "govlab/scan.hpp"

namespace govlab {

using Json = nlohmann::json;

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string to_document(const Json& j);

Json to_json(const OrbitLimits& limits);
Json to_json(const CycleRecord& c);
Json to_json(const ScanAccumulator& acc);
Json to_json(const ScanReport& r);
Json to_json(const AncestorNode& n);
Json to_json(const ConditionSolution& s);
Json to_json(const ClosedFormMismatch& m);
Json to_json(const DescentCheck& d);
Json to_json(const Promotion& p);

/// Parsers validate structure and throw std::invalid_argument (or a json
/// exception) on malformed input; cycles are re-canonicalized, which replays them.
OrbitLimits limits_from_json(const Json& j);
CycleRecord cycle_from_json(const Json& j, const Rule& rule);
ScanAccumulator accumulator_from_json(const Json& j, const Rule& rule);

Natural natural_from_json(const Json& j);

}  // namespace govlab
