#ifndef HYPERMAJ_ERRORS_HPP
#define HYPERMAJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypermaj {

// Root of the library's exception hierarchy. Callers that only need a
// coarse pass/fail split can catch this; the CLI maps subclasses to
// distinct exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched vector/matrix/polynomial dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (bad degree,
// invalid permutation, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A polynomial (or matrix) required to be symmetric is not.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

// The direction handed to an eigenvalue computation does not satisfy
// P(a) > 0, so no directional spectrum exists.
class NotHyperbolicDirection : public Error {
 public:
  using Error::Error;
};

// A required majorization relation between two vectors does not hold.
class MajorizationError : public Error {
 public:
  using Error::Error;
};

// Matrix fails the doubly stochastic entry/row/column-sum checks.
class NotDoublyStochastic : public Error {
 public:
  using Error::Error;
};

// A point required to lie in a hyperbolicity cone does not.
class ConeMembershipError : public Error {
 public:
  using Error::Error;
};

// Exact group averaging was asked for a group too large to enumerate.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

// Leading coefficient of a root-finding input is negligible relative to
// the rest, so the nominal degree is not trustworthy.
class DegenerateLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

// Malformed input file (JSON/CSV); message carries file and field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermaj

#endif  // HYPERMAJ_ERRORS_HPP
