#pragma once

#include <stdexcept>

// Exception types shared across the library.  Each names the violated
// contract, not the call site that noticed it.

namespace snakepath {

// Enumeration request larger than the configured size limit.
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A statistic defined only on ordinary permutations was asked about a
// window with negative entries.
struct NotTypeA : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Substituting 0 for a variable that occurs with negative exponent.
struct ZeroSubstitutionIntoLaurent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation defined only for some snake flavors.
struct FlavorUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A change-of-sign vector that no sign assignment realizes.
struct InconsistentVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Snake passed to an operation expecting a different flavor.
struct FlavorMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Path passed to an operation expecting a different weighting scheme.
struct SchemeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Window that fails the up-down (or sign) conditions of a snake class.
struct NotASnake : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Step sequence that is not a valid weighted path of the expected kind.
struct MalformedPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verification id not present in the registry.
struct UnknownIdentity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-check between two internal computations failed; indicates a bug,
// not bad input.
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace snakepath
