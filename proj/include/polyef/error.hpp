#pragma once

#include <stdexcept>
#include <string>

namespace polyef {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// BᵀB is singular, so the graph cannot be put in x = C̄y + b̄ form.
class GramSingular : public Error {
public:
  GramSingular() : Error("Gram matrix BᵀB is singular") {}
};

class EnumerationBoundExceeded : public Error {
public:
  using Error::Error;
};

/// Input exceeds the configured desk-scale limits of a conversion.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed (only raised in verification mode).
class VerificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Verification mode enables expensive self-checks (duality certificates,
// H/V agreement of cached representations). Off unless POLYEF_VERIFY is set.
bool verification_enabled();
void set_verification(bool enabled);

} // namespace polyef
