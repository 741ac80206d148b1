#pragma once

#include <cstdint>

namespace testsupport {

/// Seed for randomized property tests; set with --seed=N, fixed by default.
std::uint64_t seed();

}  // namespace testsupport
