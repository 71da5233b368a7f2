#pragma once

#include <stdexcept>
#include <string>

namespace gencor {

// Base class for all library errors. Each subclass maps to one failure mode
// that callers (notably the CLI) distinguish.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySample : public Error {
 public:
  EmptySample() : Error("no complete observation pair") {}
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& what = "sequence lengths differ") : Error(what) {}
};

class InvalidParam : public Error {
 public:
  using Error::Error;
};

class LevelOutOfRange : public InvalidParam {
 public:
  using InvalidParam::InvalidParam;
};

class UnsupportedFunctional : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InsufficientTailData : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

class EmptyRegion : public Error {
 public:
  using Error::Error;
};

class TargetUnattainable : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gencor
