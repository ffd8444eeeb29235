#pragma once

#include <stdexcept>
#include <string>

namespace sspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input: unpointed where pointed is required,
// mismatched sources, broken JSON, invalid partition tables.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A construction that must succeed mathematically did not; indicates a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sspec
