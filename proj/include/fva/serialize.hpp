#pragma once

#include <json.hpp>

#include "fva/arborization.hpp"
#include "fva/discharging.hpp"
#include "fva/reducible.hpp"
#include "fva/solvers.hpp"

namespace fva {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const IntervalSet& s);
Json to_json(const FractionalArborization& phi);
Json to_json(const Violation& v);
Json to_json(const VerifyReport& r);
Json to_json(const ConfigurationWitness& w);
Json to_json(const ChargeLedger& ledger);
Json to_json(const Lemma4Result& r);
Json to_json(const FractionalCoverResult& r);
Json to_json(const ExtensionReport& r);
Json vertex_list(const VertexSet& s);

/// {"vertex": [["p/q", "p'/q'"], ...], ...}; throws ParseError on malformed input.
FractionalArborization arborization_from_json(const Json& j);
IntervalSet interval_set_from_json(const Json& j);

} // namespace fva
