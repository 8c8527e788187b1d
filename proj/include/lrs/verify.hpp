#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrs/code.hpp"

namespace lrs {

/// Property suites behind `verify`. Each returns one Check per property.
struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool ok() const noexcept;
};

std::vector<std::string> suite_names();

/// Runs "gf", "skewpoly", "sumrank", "lrs", "bounds" or "all".
std::vector<SuiteResult> run_suites(const std::string& name, uint64_t seed);

}  // namespace lrs
