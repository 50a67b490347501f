#pragma once

#include <stdexcept>
#include <string>

namespace permpat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed words, duplicate letters, bad flags, out-of-domain arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Requested n exceeds the configured enumeration limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// A formula produced a non-integral or negative value, or a table invariant broke.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace permpat
