#pragma once

#include <stdexcept>

namespace cuspsl2 {

// Base of every library error, so callers can catch the family at once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvertZero : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotInModel : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class DivisionByNonUnit : public Error {
 public:
  using Error::Error;
};

class NotRegularUnipotent : public Error {
 public:
  using Error::Error;
};

class NotACoverMorphism : public Error {
 public:
  using Error::Error;
};

class NoMatch : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroFunction : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspsl2
