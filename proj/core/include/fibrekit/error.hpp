#pragma once

#include <stdexcept>

namespace fibrekit {

/// Raised when an operation is called outside its domain: mismatched
/// surfaces, out-of-range genus, wrong bound kinds and similar.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a self-check that must hold by construction fails.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fibrekit
