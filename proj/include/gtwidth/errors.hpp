#pragma once

#include <stdexcept>
#include <string>

namespace gtwidth {

/// Input that does not describe a weight in the chosen positive Weyl chamber.
struct InvalidWeightError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The orbit through this weight is a single point; no positive coroot
/// pairing exists and none of the polytope machinery applies.
struct PointOrbitError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An operation defined only for one family was called on another.
struct WrongFamilyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Indecomposability is defined for regular weights only.
struct NotRegularError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Internal invariant breaches. These indicate a construction bug, never bad
/// user input, and map to a dedicated process exit code.
struct ConstructionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnimodularityFailure : ConstructionError {
  using ConstructionError::ConstructionError;
};

struct ContainmentFailure : ConstructionError {
  using ConstructionError::ConstructionError;
};

/// A sampled matrix produced a Gelfand-Tsetlin value that should have been
/// constant but was not (sampling or labeling bug).
struct ConstantMismatchError : ConstructionError {
  using ConstructionError::ConstructionError;
};

}  // namespace gtwidth
