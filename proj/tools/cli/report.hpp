#pragma once

#include <json.hpp>

#include "sccay/constructions.hpp"
#include "sccay/fingerprint.hpp"
#include "sccay/graph_checks.hpp"
#include "sccay/group_algebra.hpp"
#include "sccay/iso.hpp"
#include "suite.hpp"

// JSON views of library results. Key order is insertion order so that
// identical inputs produce byte-identical documents.
namespace sccay::report {

using Json = nlohmann::ordered_json;

Json to_json(const SrgParams& p);
Json to_json(const SrgCheck& c);
Json to_json(const DrCheck& c);
Json to_json(const InvariantCounts& c);
Json to_json(const IdentityCheck& c, const AbelianGroup& group);
Json to_json(const SchurCheck& c, const AbelianGroup& group);
Json to_json(const IsoResult& r, const AbelianGroup* group, bool timings);
Json to_json(const ConstructionReport& r);
Json to_json(const suite::CriterionResult& r, bool timings);

}  // namespace sccay::report
