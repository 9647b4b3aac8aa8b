#pragma once

// Error taxonomy shared across the library.
//
// Callers that break documented preconditions get PreconditionError; the
// remaining types signal mathematical infeasibility or resource exhaustion
// and are part of the normal API surface (the CLI maps them to exit codes).

#include <stdexcept>
#include <string>

namespace mjstar {

// A documented precondition was violated (index ranges, shape limits, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested uniform degree exceeds (j-1)*s, the degree of the complete host.
struct DegreeTooLarge : std::domain_error {
  using std::domain_error::domain_error;
};

// j*s*d is odd, so no d-regular spanning subgraph of K_{j x s} can exist.
struct ParityInfeasible : std::domain_error {
  using std::domain_error::domain_error;
};

// No tagged decomposition of the requested degree fits the window bounds.
// Parity-feasible degrees always decompose; this is kept as a hard failure
// so a gap would surface instead of being silently patched over.
struct NoDecomposition : std::domain_error {
  using std::domain_error::domain_error;
};

// A witness colouring was requested at or above the arrowing threshold.
struct ThresholdExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

// The oracle's search node budget ran out before reaching a verdict.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The brute-force enumerator refused an instance over its edge-count cap.
struct InstanceTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A colouring file could not be parsed (bad header, missing or duplicate
// edges, unknown colour letters).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mjstar
