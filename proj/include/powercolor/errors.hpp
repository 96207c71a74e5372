#pragma once

#include <stdexcept>
#include <string>

namespace powercolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: unknown vertex id, mismatched domain, bad partition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A product or generated graph would exceed the configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The work budget (backtracking node expansions) ran out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ImproperColoring : public Error {
 public:
  using Error::Error;
};

class NotACograph : public Error {
 public:
  using Error::Error;
};

class NotWeaklyCliqued : public Error {
 public:
  using Error::Error;
};

/// A coloring that was required to be trivial is not.
class NontrivialColoring : public Error {
 public:
  using Error::Error;
};

/// A guarantee of the underlying mathematics failed to hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace powercolor
