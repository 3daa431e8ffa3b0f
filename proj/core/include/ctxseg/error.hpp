#pragma once

#include <stdexcept>
#include <string>

namespace ctxseg {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input: shape mismatch, out-of-range index, violated precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed or internally inconsistent configuration document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File access or format problems.
class IoError : public Error {
 public:
  using Error::Error;
};

// A verification step (gradient check, oracle comparison) reported failure.
class CheckError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw InvalidArgumentError(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgumentError(msg);
}

}  // namespace ctxseg
