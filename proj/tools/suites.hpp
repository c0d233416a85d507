#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace padwav::cli {

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite (or "all") for prime p and returns its report:
/// {"suite", "p", "seed", "passed", "checks": [{"name", "cases", "max_error",
/// "tolerance", "passed", "witnesses"}...]}. "all" nests the individual
/// reports under "suites". Throws DomainError for an unknown suite name.
nlohmann::ordered_json run_suite(const std::string& name, int p, std::uint64_t seed);

}  // namespace padwav::cli
