#pragma once

#include <stdexcept>
#include <string>

namespace cpm {

// Base class for all domain errors raised by the library. The CLI maps
// these to one exit code, distinct from argument-parsing failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when text input (CLI arguments, "a/b" literals, bit strings)
// cannot be parsed.
struct ParseError : Error { using Error::Error; };

// Precondition violations on otherwise well-typed arguments
// (eps <= 0, negative time, arity mismatch).
struct InvalidArgument : Error { using Error::Error; };

// A code does not decode to the requested structure.
struct InvalidCode : Error { using Error::Error; };

// Interval endpoints with q >= r.
struct InvalidEndpoints : Error { using Error::Error; };

// Factoring a value exceeded the configured effort budget.
struct FactorizationOverflow : Error { using Error::Error; };

// A code fed to a model operation is not a member of its state set.
struct NotAState : Error { using Error::Error; };

struct UnknownObservable : Error { using Error::Error; };
struct UnknownModel : Error { using Error::Error; };

// extract_function: no state with the requested input value below the
// search bound.
struct NoInputState : Error { using Error::Error; };

// extract_function: the done-flag never stabilized within the step bound.
struct DidNotSettle : Error { using Error::Error; };

// Decay-model queries at time t = 0.
struct BadTime : Error { using Error::Error; };

// No state is consistent with the conditioning prefix.
struct EmptyConditioningSet : Error { using Error::Error; };

// Consecutive nodes violate the tree-of-histories child relation.
struct NotABranch : Error { using Error::Error; };

// An interval sequence failed the nesting invariant at some depth.
struct NestingViolation : Error { using Error::Error; };

// refine: no interval below the width target within max_depth.
struct PrecisionNotReached : Error { using Error::Error; };

// CLI tree command beyond its output cap.
struct DepthTooLarge : Error { using Error::Error; };

}  // namespace cpm
