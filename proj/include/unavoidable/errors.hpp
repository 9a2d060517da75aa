#pragma once

#include <stdexcept>
#include <string>

namespace unav {

/// Malformed input text (.scx files, weight files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive scan would exceed its configured work budget. Raised before
/// any work is done; results are never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace unav
