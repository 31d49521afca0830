#pragma once

#include <stdexcept>
#include <string>

namespace skc {

// Input text could not be parsed; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance exceeds a documented state-space or enumeration limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conditioning on a slice of probability weight zero.
class ZeroMassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skc
