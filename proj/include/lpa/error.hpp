#pragma once

#include <stdexcept>

namespace lpa {

/// Raised for malformed input and for operations whose preconditions fail
/// on otherwise valid data (unknown names, non-composable paths, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpa
