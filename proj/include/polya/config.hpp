#ifndef POLYA_CONFIG_HPP
#define POLYA_CONFIG_HPP

#include <cstdint>

namespace polya {

// Library-wide default limits.  The CLI overrides them with flags or the
// POLYA_TRUNC / POLYA_GROUP_CAP / POLYA_ORACLE_CAP / POLYA_ENUM_BUDGET
// environment variables.
inline constexpr unsigned kDefaultTrunc = 10;
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;
inline constexpr std::uint64_t kDefaultOracleCap = 20'000;
inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

}  // namespace polya

#endif
