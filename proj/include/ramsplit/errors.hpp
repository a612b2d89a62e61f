#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsplit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownComponent : public Error {
 public:
  using Error::Error;
};

class UnknownLocation : public Error {
 public:
  using Error::Error;
};

class NotSingular : public Error {
 public:
  using Error::Error;
};

class NotDoublyRamified : public Error {
 public:
  using Error::Error;
};

class NotCold : public Error {
 public:
  using Error::Error;
};

class MissingLocal : public Error {
 public:
  using Error::Error;
};

class InconsistentLocals : public Error {
 public:
  using Error::Error;
};

class InfeasibleParams : public Error {
 public:
  using Error::Error;
};

class HotBlowupUnsupported : public Error {
 public:
  using Error::Error;
};

class RatioAbsent : public Error {
 public:
  using Error::Error;
};

class ConflictingConstraints : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A hot point was found where the construction needs none. Carries the
/// location id of the first hot point in id order.
class IndexTooLarge : public Error {
 public:
  explicit IndexTooLarge(std::string witness)
      : Error("hot point at " + witness + ": index is l^2"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class HotPointEncountered : public Error {
 public:
  explicit HotPointEncountered(std::string where)
      : Error("hot point encountered at " + where), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Raised when an operation requires valid input and validation found problems.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> messages)
      : Error(join(messages)), messages_(std::move(messages)) {}
  const std::vector<std::string>& messages() const noexcept { return messages_; }

 private:
  static std::string join(const std::vector<std::string>& m) {
    std::string out = "validation failed";
    for (const auto& s : m) out += "; " + s;
    return out;
  }
  std::vector<std::string> messages_;
};

}  // namespace ramsplit
