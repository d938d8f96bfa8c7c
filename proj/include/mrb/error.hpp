#pragma once

#include <stdexcept>
#include <string>

namespace mrb {

//! Malformed data or mismatched dimensions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A named mathematical invariant required by an operation does not hold.
struct PreconditionError : std::runtime_error {
  PreconditionError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mrb
