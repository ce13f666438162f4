#ifndef POLYA_CLI_HPP
#define POLYA_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polya/config.hpp"

namespace polya {

// Insertion-ordered JSON keeps ResultDocuments byte-identical across runs.
using Json = nlohmann::ordered_json;

struct Settings {
    unsigned trunc = kDefaultTrunc;
    std::uint64_t group_cap = kDefaultGroupCap;
    std::uint64_t oracle_cap = kDefaultOracleCap;
    std::uint64_t enum_budget = kDefaultEnumBudget;
};

// Applies POLYA_TRUNC, POLYA_GROUP_CAP, POLYA_ORACLE_CAP and
// POLYA_ENUM_BUDGET on top of `base`.
Settings settings_from_env(Settings base = {});

const std::vector<std::string>& known_commands();

// Validates a job document, fills missing limit fields from `fallback`,
// canonicalizes every value (permutations to cycle notation, polynomials to
// canonical form) and re-emits all fields in a fixed order.  Idempotent.
// Count blocks given by equations get their values computed here.
Json normalize_job(const Json& job, const Settings& fallback);

// Runs a normalized job.  The ResultDocument echoes the job under "input"
// and carries the command output under "output"; parsing the echo as a new
// job reproduces the result byte for byte.
Json run_job(const Json& job);

// 0 normally; 3 when an oracle-check output reports mismatches.
int result_exit_code(const Json& result);

}  // namespace polya

#endif
