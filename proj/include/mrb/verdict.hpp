#pragma once

#include <string>
#include <vector>

#include "mrb/linalg.hpp"

namespace mrb {

//! Outcome of an exhaustive identity check. On failure, `tuple` holds the 0-based
//! basis indices of the first violation in canonical order.
struct Verdict {
  bool ok = true;
  std::string where;
  std::vector<int> tuple;
  Vec residual;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string where, std::vector<int> tuple, Vec residual) {
    return {false, std::move(where), std::move(tuple), std::move(residual)};
  }
};

std::string describe(const Verdict& v);

}  // namespace mrb
