#pragma once

#include <stdexcept>

namespace arithmo {

// A table or sieve would exceed the configured size cap.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A fast path was asked to handle a function class it does not cover
// (e.g. the multiplicative prime-power path applied to delta).
class unsupported_path_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// The Id*f prime-power denominator vanished; callers fall back to the
// naive divisor sum.
class fast_path_unavailable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace arithmo
