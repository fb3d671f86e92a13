#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace boxworld {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario, table shape or index out of range.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A behavior violates normalization, positivity or no-signaling.
class InvalidBehavior : public Error {
 public:
  using Error::Error;
};

/// A precondition on numeric arguments does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured size cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// An ensemble support is affinely dependent, so its weights are not unique.
class AmbiguousEnsemble : public Error {
 public:
  AmbiguousEnsemble(const std::string& what, std::vector<std::size_t> support)
      : Error(what), support_(std::move(support)) {}
  const std::vector<std::size_t>& support() const { return support_; }

 private:
  std::vector<std::size_t> support_;
};

}  // namespace boxworld
