#pragma once

#include <stdexcept>
#include <string>

namespace desavoid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Carries the name of the property that ruled the pattern out.
class UnsupportedClass : public Error {
 public:
  UnsupportedClass(std::string property, const std::string& message)
      : Error(message), property_(std::move(property)) {}
  const std::string& property() const { return property_; }

 private:
  std::string property_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ZModeMismatch : public Error {
 public:
  using Error::Error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

}  // namespace desavoid
