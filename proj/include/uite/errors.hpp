#pragma once

#include <stdexcept>
#include <string>

namespace uite {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration values.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed or inconsistent data files (CSV schema, non-finite values, ...).
struct DataError : Error {
    using Error::Error;
};

// Training NLL became non-finite; carries the last finite epoch in message.
struct DivergenceError : Error {
    using Error::Error;
};

// A policy recommended nobody; ERUPT is undefined, never 0/0.
struct NoRecommendationError : Error {
    using Error::Error;
};

// A pipeline stage is missing an upstream artifact; message names the
// subcommand that produces it.
struct MissingArtifactError : Error {
    using Error::Error;
};

}  // namespace uite
