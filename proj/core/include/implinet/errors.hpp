#pragma once

#include <stdexcept>
#include <string>

namespace implinet {

/// Invalid argument, configuration, or malformed input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed snapshot or config text; the message names the offending
/// line or record.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Filesystem failure (open/read/write).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Reaching one of these is a defect, not a
/// user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace implinet
