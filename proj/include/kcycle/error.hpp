#pragma once

#include <stdexcept>
#include <string>

namespace kcycle {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInstanceError : public Error {
 public:
  EmptyInstanceError() : Error("instance has no cycles") {}
};

class CycleTooShortError : public Error {
 public:
  explicit CycleTooShortError(int length)
      : Error("cycle length " + std::to_string(length) + " is below 2") {}
};

class InvalidVertexError : public Error {
 public:
  explicit InvalidVertexError(const std::string& what) : Error(what) {}
};

class BadCallOrderError : public Error {
 public:
  BadCallOrderError(int a, int b)
      : Error("second call round " + std::to_string(b) +
              " must be after first call round " + std::to_string(a)) {}
};

class NotCenterOriginatorError : public Error {
 public:
  NotCenterOriginatorError()
      : Error("schedule is only defined for the central originator") {}
};

class InstanceTooLargeError : public Error {
 public:
  explicit InstanceTooLargeError(const std::string& what) : Error(what) {}
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(long long limit)
      : Error("search budget of " + std::to_string(limit) +
              " nodes exhausted") {}
};

class IllegalFamilyParamsError : public Error {
 public:
  explicit IllegalFamilyParamsError(const std::string& what) : Error(what) {}
};

}  // namespace kcycle
