#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qtheta/qseries.hpp"

namespace qtheta {

struct Mismatch {
  std::int64_t degree = 0;
  coeff_t lhs = 0;
  coeff_t rhs = 0;
};

/// Outcome of one coefficient-exact comparison. `first_mismatch` is set
/// exactly when the check failed.
struct Report {
  std::string name;
  std::int64_t trunc = 0;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
  std::int64_t elapsed_ms = 0;
};

}  // namespace qtheta
