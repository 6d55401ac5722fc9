#ifndef CLAW_ERRORS_HPP
#define CLAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace claw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- expression kernel ---

/// A substitution binding mentions a symbol that is itself bound.
class CyclicBinding : public Error {
  public:
    using Error::Error;
};

/// Numeric evaluation reached a symbol with no value.
class UnboundSymbol : public Error {
  public:
    using Error::Error;
};

/// Division by zero or an evaluation outside the function's domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// An expression leaves the supported fragment (e.g. exp of a state variable).
class UnsupportedExpression : public Error {
  public:
    using Error::Error;
};

// --- jet calculus / symmetry ---

/// Input carries derivative symbols where a jet-order-0 expression is required.
class JetOrderExceeded : public Error {
  public:
    using Error::Error;
};

/// On-shell reduction touched adjoint symbols but no adjoint system was given.
class MissingAdjoint : public Error {
  public:
    using Error::Error;
};

/// Two objects disagree on the system dimension.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// The generator is not admitted by the system (or no coefficient matrix exists).
class NotASymmetry : public Error {
  public:
    using Error::Error;
};

// --- conservation pipeline ---

class InvarianceTestFailed : public Error {
  public:
    using Error::Error;
};

class CertificateFailed : public Error {
  public:
    using Error::Error;
};

// --- numerics ---

/// A trajectory component left the representable range.
class NonFinite : public Error {
  public:
    using Error::Error;
};

} // namespace claw

#endif // CLAW_ERRORS_HPP
