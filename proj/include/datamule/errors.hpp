#pragma once

#include <stdexcept>
#include <string>

namespace datamule {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A value passed to a library call is out of range or malformed.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A scenario/fleet/run configuration is inconsistent or incomplete.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// An input file (CSV, VRP instance, network file) could not be read.
class IngestionError : public Error {
 public:
  using Error::Error;
};

// A node sequence violates its preconditions (not edge-connected, wrong root).
class InvalidPathError : public Error {
 public:
  using Error::Error;
};

// No route exists between the requested endpoints.
class NoPathError : public Error {
 public:
  using Error::Error;
};

// The exact solver refuses instances beyond its enumeration limits.
class RefusalError : public Error {
 public:
  using Error::Error;
};

// A numeric transform was asked to do something undefined (e.g. invert 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace datamule
