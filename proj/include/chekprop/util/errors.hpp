#pragma once

#include <stdexcept>
#include <string>

namespace chekprop {

// Base for all pipeline errors so the CLI can map them to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad value fed to a corpus operation (non-finite temperature, negative distance).
struct DomainError : Error {
    using Error::Error;
};

// Scenario/loop configuration violates an invariant.
struct ConfigError : Error {
    using Error::Error;
};

// Input bundle fails validation (missing description, no unit tests).
struct BundleError : Error {
    using Error::Error;
};

// Filesystem failure; message names the offending path.
struct IoError : Error {
    using Error::Error;
};

// Caller violated an API precondition (e.g. improvement prompt with no failures).
struct ContractError : Error {
    using Error::Error;
};

// Live provider transport or authentication failure.
struct ProviderError : Error {
    using Error::Error;
};

// Replay miss or scripted-queue exhaustion; carries the conversation digest.
struct FixtureMissingError : Error {
    explicit FixtureMissingError(const std::string& what, std::string digest = {})
        : Error(what), digest(std::move(digest)) {}
    std::string digest;
};

// LLM response contained no extractable test function.
struct ExtractionError : Error {
    using Error::Error;
};

// A PBT assertion falls outside the supported guard grammar.
struct GuardExtractionError : Error {
    using Error::Error;
};

// Unknown subject, state field, or fixture id.
struct LookupError : Error {
    using Error::Error;
};

// Executability patch does not apply.
struct ClassificationError : Error {
    using Error::Error;
};

// A recorded generator input falls outside every cell of a partition dimension.
struct SchemeCoverageError : Error {
    using Error::Error;
};

// Mock pin layer misuse.
struct PinInUseError : Error {
    using Error::Error;
};
struct PinInvalidStateError : Error {
    using Error::Error;
};

}  // namespace chekprop
