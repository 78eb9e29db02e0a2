#pragma once

#include <json.hpp>

#include "deltatopo/assembly.hpp"
#include "deltatopo/chain_complex.hpp"

namespace delta {

using Json = nlohmann::ordered_json;

Json delta_to_json(const DeltaSet& x);
DeltaSet delta_from_json(const Json& j);

// "fixture:<name>" or a path to a Delta-set JSON file.
DeltaSet resolve_input(const std::string& spec);

// Cover files extend the Delta-set JSON of the total space with
//   "group": n, "action": {label: label} for the generator,
//   "projection": {label: label}; the base is derived from the projection.
Json cover_to_json(const CoverSpec& c);
CoverSpec cover_from_json(const Json& j);
// "fixture:cyclic-cover-<n>" or a path to a cover JSON file.
CoverSpec resolve_cover_input(const std::string& spec);

Json graded_group_to_json(const GradedGroup& g);
Json counts_to_json(const std::vector<long>& counts);

// "Z" or "Z<p>" with p prime (e.g. Z2, Z97).
RingSpec ring_from_string(const std::string& s);

Json load_json_file(const std::string& path);

}  // namespace delta
