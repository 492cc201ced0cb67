#pragma once

#include <cstdint>

#include <json.hpp>

namespace tensorhn::cli {

/// Oracle suites: PAVA vs envelope, multi-index brute force vs closed form,
/// polar iteration vs root multiplicity. Each suite reports cases/failures.
nlohmann::json run_selftest(std::uint64_t seed);

}  // namespace tensorhn::cli
