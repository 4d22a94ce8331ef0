#pragma once

#include <stdexcept>
#include <string>

namespace gstirling {

/// Base class for recoverable errors raised on invalid inputs.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_divisible : public error {
 public:
  using error::error;
};

class divisor_zero : public error {
 public:
  using error::error;
};

class missing_assignment : public error {
 public:
  using error::error;
};

class parts_mismatch : public error {
 public:
  using error::error;
};

class beta_zero : public error {
 public:
  using error::error;
};

class table_too_small : public error {
 public:
  using error::error;
};

class cap_exceeded : public error {
 public:
  using error::error;
};

class unknown_profile : public error {
 public:
  using error::error;
};

class bad_range : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

class limit_exceeded : public error {
 public:
  using error::error;
};

/// An exact division that the algebra guarantees must succeed has failed.
/// Signals an implementation fault, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gstirling
