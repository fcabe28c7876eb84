// Failure taxonomy shared by all modules.  Every throwing path uses one of
// these so callers (CLI, verify harness) can map errors to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace eulerchar {

// Bad argument to an operation (odd Bernoulli index, negative factorial, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request outside the mathematical domain (unstable (g,s) pair, g <= 0, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Antidifferentiation of a series with a simple-pole term.
struct ResidueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recursion rows requested before their dependencies exist.
struct SequencingError : std::logic_error {
    using std::logic_error::logic_error;
};

// An exact cross-check that must hold failed; message names the offender.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Genus extraction could not stabilize on held-out samples.
struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured cap was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floating precision too low to resolve an asymptotic bound.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A truncated local expansion was too shallow for the requested coefficient.
// Callers retry with more depth; this never produces a wrong value.
struct ExpansionDepthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eulerchar
