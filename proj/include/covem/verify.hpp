#pragma once

// Seeded property suites behind `covem verify`.

#include "covem/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covem {

/// Suite names in run order; "all" runs every one of them.
inline const std::vector<std::string> kSuiteNames = {
    "hodge", "fields", "constitutive", "stress", "oracle", "maxwell"};

/// Runs one suite (or "all"). Each check reports the worst violation over
/// its samples. Every suite draws from split_seed(seed, name), so results do
/// not depend on which other suites run. Unknown names throw
/// std::invalid_argument.
Report cmd_verify(const std::string& suite, std::uint64_t seed);

}  // namespace covem
