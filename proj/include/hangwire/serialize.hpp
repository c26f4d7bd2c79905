#pragma once

// JSON records for the CLI's --json output: one object per result.

#include <json.hpp>

#include "hangwire/construct.hpp"
#include "hangwire/search.hpp"
#include "hangwire/spec.hpp"

namespace hangwire {

using Json = nlohmann::ordered_json;

Json to_json(const Verdict& v);
Json to_json(const ConstructionReport& r);
Json to_json(const SearchOutcome& o);
Json to_json(const MinimumOutcome& o);
Json to_json(const std::vector<LengthTableRow>& rows, int k);

}  // namespace hangwire
