// errors.hpp: exception types thrown on contract violations.
#pragma once

#include <stdexcept>
#include <string>

namespace gmchar {

// Base for all domain-level failures raised by this library.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// alpha-value denominator 13*chi1 - chi2 vanishes on a nontrivial character.
struct DegenerateDenominator : DomainError {
  using DomainError::DomainError;
};

// slope chi_delta / chi_lambda requested with chi_lambda = 0.
struct ZeroLambda : DomainError {
  using DomainError::DomainError;
};

// alpha from (lambda, delta) requested with delta = 0.
struct ZeroDelta : DomainError {
  using DomainError::DomainError;
};

struct NotCoprime : DomainError {
  using DomainError::DomainError;
};

// Gap sequence fails the symmetry test (or b_1 != 1).
struct AsymmetricGaps : DomainError {
  using DomainError::DomainError;
};

struct OutOfRange : DomainError {
  using DomainError::DomainError;
};

// Attachment subset not contained in {1..branch_count}.
struct InvalidSubset : DomainError {
  using DomainError::DomainError;
};

// No catalogued closed form for the requested (family, subset) pair.
struct MissingClosedForm : DomainError {
  using DomainError::DomainError;
};

// (n-1) does not divide 2g in the n-ribbon ratio.
struct DivisibilityViolation : DomainError {
  using DomainError::DomainError;
};

// g not congruent to 0 or 1 mod 3 where that residue is required.
struct WrongResidue : DomainError {
  using DomainError::DomainError;
};

// Symbolic discriminant came out weighted-inhomogeneous (cannot happen
// for a correct expansion; guards the oracle).
struct NotWeightedHomogeneous : DomainError {
  using DomainError::DomainError;
};

// crosscheck() called on a model with no associated intersection family.
struct NoAssociatedFamily : DomainError {
  using DomainError::DomainError;
};

// delta_parts supplied to a Character do not sum to chi_delta.
struct DeltaPartsMismatch : DomainError {
  using DomainError::DomainError;
};

}  // namespace gmchar
