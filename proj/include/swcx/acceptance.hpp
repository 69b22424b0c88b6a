#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swcx/group.hpp"

namespace swcx {

struct AcceptanceOptions {
    std::uint64_t max_enum = kDefaultEnumGuard;
    std::uint64_t max_gl = kDefaultGlGuard;
    std::uint32_t seed = 1;
};

struct PropertySuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    bool exhaustive = false;  // full domain covered; cases below 1000 allowed
    double seconds = 0.0;
};

// The six seeded property suites: field axioms, weight-composition zero
// count, coset-intersection dichotomy, orbit join identity, invariance under
// monomial maps, and representative independence of the coordinate matrices.
std::vector<PropertySuiteResult> run_property_suites(std::uint32_t seed);

// Runs the eight acceptance checks in order, printing one [PASS]/[FAIL] line
// per check plus a summary line. Returns true iff every check passed within
// its time budget.
bool run_acceptance(std::ostream& out, const AcceptanceOptions& opts = {});

}  // namespace swcx
