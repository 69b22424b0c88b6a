#pragma once

#include <stdexcept>
#include <string>

namespace swcx {

// Thrown when an enumeration or brute-force sweep would exceed its configured
// size guard. Distinct from std::invalid_argument so callers can map guard
// violations to a usage-style failure instead of a computation failure.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swcx
