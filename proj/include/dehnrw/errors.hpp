#pragma once

#include <stdexcept>
#include <string>

namespace dehnrw {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (PD code, JSON, word syntax).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// The input diagram or a derived structure violates a hypothesis the
// construction depends on (not alternating, not common, role conflict, ...).
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// A rewrite step failed the termination-order check.
struct MonitorViolation : Error {
    explicit MonitorViolation(const std::string& msg) : Error(msg) {}
};

// Step-count fuse tripped while normalizing with a system that carries no
// termination guarantee.
struct FuseExceeded : Error {
    explicit FuseExceeded(const std::string& msg) : Error(msg) {}
};

} // namespace dehnrw
