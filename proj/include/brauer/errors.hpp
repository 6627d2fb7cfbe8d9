#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// group_core
class OrderBoundExceeded : public Error { using Error::Error; };
class InvalidPermutation : public Error { using Error::Error; };
class NotNormal : public Error { using Error::Error; };
class NotPrime : public Error { using Error::Error; };
class NotASubgroup : public Error { using Error::Error; };
class InvalidHomomorphism : public Error { using Error::Error; };

// lattice_algebra
class DimensionMismatch : public Error { using Error::Error; };
class NotASublattice : public Error { using Error::Error; };

// burnside
class GroupMismatch : public Error { using Error::Error; };
class InvalidProjection : public Error { using Error::Error; };

// modular_map
class NotCyclic : public Error { using Error::Error; };
class PrimeDividesOrder : public Error { using Error::Error; };
class SolverFailure : public Error { using Error::Error; };

// primitivity
class NotInFamily : public Error { using Error::Error; };
class NonIntegralCoefficient : public Error { using Error::Error; };
class NoUnitRelation : public Error { using Error::Error; };
class NotPQuasiElementary : public Error { using Error::Error; };

// catalog_io
class ParseError : public Error { using Error::Error; };
class ValidationError : public Error { using Error::Error; };
class NotFaithful : public ValidationError { using ValidationError::ValidationError; };
class NotIrreducible : public ValidationError { using ValidationError::ValidationError; };

}  // namespace brauer
