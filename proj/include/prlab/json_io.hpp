#pragma once

#include <string>

#include "json.hpp"
#include "prlab/filters.hpp"
#include "prlab/preradical.hpp"
#include "prlab/report.hpp"

namespace prlab {

using Json = nlohmann::ordered_json;

/// Parses JSON text; throws ParseError carrying the byte offset.
Json parse_json(const std::string& text);

// Every *_from_json throws InvalidParameter on a document of the wrong shape
// and propagates the engine's validation errors.

/// {name, invariant_factors, mult_table, one, family?}
Json to_json(const FiniteRing& r);
RingPtr ring_from_json(const Json& j);

/// {ring, invariant_factors, action, gens}; `action` holds one matrix per ring generator.
Json to_json(const FinModule& m);
ModulePtr module_from_json(const Json& j, const RingPtr& ring);

/// Canonical generators as coordinate vectors.
Json to_json(const Submodule& s);
Submodule submodule_from_json(const Json& j, const ModulePtr& parent);

/// {format, hom_cache, ring, policy, labels, reps, closure_certificate}. Hom
/// and submodule caches are rebuilt on load; the stored certificate must match
/// the recomputed one.
Json to_json(const Universe& u);
UniversePtr universe_from_json(const Json& j);

/// {ring, values: {label: submodule}}
Json to_json(const Preradical& p);
Preradical preradical_from_json(const Json& j, const UniversePtr& u);

/// {ring, ideals: [canonical generators], flags: {linear, gabriel}}
Json to_json(const Filter& f);
Filter filter_from_json(const Json& j, const RingPtr& ring);

/// {trait: {holds, witness?: {module, sub?, detail}}}
Json to_json(const TraitReport& t, const Universe& u);
TraitReport trait_report_from_json(const Json& j, const UniversePtr& u);
bool operator==(const TraitReport& a, const TraitReport& b);

/// [{claim_id, hypotheses, universe, status, instances, witness, expected_fail}]
Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

}  // namespace prlab
