#pragma once

#include <stdexcept>
#include <string>

namespace confighom {

// Structural problems in user-supplied data: bad matrix shapes, d∘d != 0,
// labels out of range, malformed JSON. Always a caller bug, never a math fact.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The requested statement exists but its hypotheses fail for these inputs
// (wrong coefficient ring, parameter below the admissible range, ...).
// Carries a short machine-readable reason so the CLI can report which
// hypothesis was violated.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(std::string reason_, const std::string& what)
        : std::runtime_error(what), reason(std::move(reason_)) {}
    std::string reason;
};

// A cross-check that was expected to agree did not. Raised by the verification
// corpus and by internal consistency gates; distinct from ValidationError so
// callers can map it to a dedicated exit code.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace confighom
