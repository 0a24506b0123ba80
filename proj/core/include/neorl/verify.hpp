#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "neorl/geometry.hpp"

namespace neorl {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on pass, first failure otherwise
};

// Self-contained verification suites: brute-force oracles recompute what the
// implementation claims. Used by the `verify` subcommand and the test
// binaries.
CheckResult check_partition(std::uint64_t seed);
CheckResult check_oracle_equivalence();
CheckResult check_superposition(std::uint64_t seed);

// The desire suite can be pointed at an alternative implementation; tests use
// this to confirm the checker rejects a sign flip.
using DesireFn = std::function<Vec2(const QVector&)>;
CheckResult check_desire_arithmetic(std::uint64_t seed, const DesireFn& impl = {});

std::vector<CheckResult> run_verification_suites(std::uint64_t seed = 20240101);

}  // namespace neorl
