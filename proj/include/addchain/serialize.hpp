#pragma once

#include <string>

#include <json.hpp>

#include "addchain/chain.hpp"
#include "addchain/identities.hpp"
#include "addchain/schedule.hpp"
#include "addchain/scholz.hpp"
#include "addchain/search.hpp"

namespace addchain {

using Json = nlohmann::ordered_json;

/// Single-line record: `n=<target>; terms=<comma list>; steps=<j:p+q list>`
/// with steps separated by bare semicolons and indices 1-based.
std::string format_record(const AdditionChain& chain);

/// Accepts either a full record line or a bare comma-separated term list
/// (the cache witness format); bare terms get inferred provenance.
/// Throws BadRecord on syntax errors and chain errors on invalid chains.
AdditionChain parse_record(const std::string& line);

Json to_json(const AdditionChain& chain);
Json to_json(const GeneratorSeq& gens);
Json to_json(const IdentityReport& report);
Json to_json(const SearchResult& result);
Json to_json(const ScholzRecord& record);
Json to_json(const Schedule& schedule);

std::string scholz_csv_header();
std::string scholz_csv_row(const ScholzRecord& record);

}  // namespace addchain
