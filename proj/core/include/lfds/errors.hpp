#pragma once

#include <stdexcept>

namespace lfds {

// Thrown when an operation would exceed a configured size or iteration cap.
// API misuse maps to std::invalid_argument, violated mathematical
// preconditions to std::domain_error.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace lfds
