#pragma once

#include <stdexcept>
#include <string>

namespace belsf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain (inverse of zero, t not dividing n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input object fails a validity requirement (not a presemifield, invalid GTF, ...).
class ValidityError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

/// A BEL tuple whose U_f / W_g do not have the required dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotReducibleError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace belsf
