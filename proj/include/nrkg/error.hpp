#pragma once
#include <stdexcept>
#include <string>

namespace nrkg {

// Base class for every error the library raises on purpose. The CLI maps
// these to exit code 1 with a one-line message; anything else is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct VocabularyError : Error {
  using Error::Error;
};
struct SplitError : Error {
  using Error::Error;
};
struct SamplingError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};

}  // namespace nrkg
