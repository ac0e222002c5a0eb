#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace hyper {

namespace detail {

template <typename... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace detail

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad token, bad weight, missing members).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid hypergraph handed to the builder.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Query for an id that does not exist in the hypergraph.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value (parts, alpha, distribution bounds, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Runtime failure inside the compute engine.
class ExecutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyper
