#pragma once

// JSON and CSV forms of the library's values.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permsum/construct.hpp"
#include "permsum/optsearch.hpp"
#include "permsum/trick.hpp"
#include "permsum/weighting.hpp"

namespace permsum {

inline constexpr std::string_view kSchemaVersion = "1";

void to_json(nlohmann::json& j, const Permutation& p);
void to_json(nlohmann::json& j, const WeightSeq& w);
void to_json(nlohmann::json& j, const InputVector& x);
void to_json(nlohmann::json& j, const SumTable& table);
void to_json(nlohmann::json& j, const VerificationReport& report);
void to_json(nlohmann::json& j, const ConstraintRecord& record);
void to_json(nlohmann::json& j, const GreedyTrace& trace);
void to_json(nlohmann::json& j, const SearchResult& result);
void to_json(nlohmann::json& j, const TrickPlan& plan);
void to_json(nlohmann::json& j, const Assignment& assignment);

/// Reads `{n, x, g, pool, labels}`; a CLI output document wrapping a plan is
/// unwrapped first. Throws MalformedInput plus every TrickPlan::make error.
TrickPlan plan_from_json(const nlohmann::json& doc, int limit = kDefaultEnumerationLimit);

/// `{"schema_version": "1", "command": ..., "payload": ...}`
nlohmann::json output_document(std::string_view command, nlohmann::json payload);

/// Header `sum,perm`, then one `sum,pi(1),...,pi(n)` row per permutation,
/// ascending by sum, antilex order within a sum. `\n` line endings.
std::string sum_table_csv(const SumTable& table);
/// Inverse of sum_table_csv. Throws MalformedInput, NotAPermutation.
std::map<std::int64_t, std::vector<Permutation>> parse_sum_table_csv(std::string_view text);

}  // namespace permsum
