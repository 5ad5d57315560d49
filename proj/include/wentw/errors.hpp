#pragma once

#include <stdexcept>
#include <string>

namespace wentw {

/// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad scalars, non-prime moduli, inconsistent tables.
class DataError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

/// A quotient-level map failed to descend from the ambient k-tensor space.
class NotWellDefined : public Error {
 public:
  using Error::Error;
};

class OneCellConditionFailed : public Error {
 public:
  using Error::Error;
};

class TwoCellConditionFailed : public Error {
 public:
  using Error::Error;
};

class CoherenceNotInvertible : public Error {
 public:
  using Error::Error;
};

/// A constructed structure failed an axiom it satisfies by theory; signals
/// invalid input that slipped past a gate, or a bug.
class AxiomFailure : public Error {
 public:
  using Error::Error;
};

class UnsupportedBase : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

}  // namespace wentw
