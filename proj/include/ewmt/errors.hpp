#pragma once

#include <stdexcept>
#include <string>

namespace ewmt {

// Base class for every typed failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The polar frame (and its 1/rho connection terms) is singular on the axis rho = 0.
struct AxisSingularity : Error {
  using Error::Error;
};

// Weingarten function evaluated at or below its domain floor -epsilon.
struct DomainError : Error {
  using Error::Error;
};

// t_s = 0 where the t_s != 0 curvature form is required.
struct DegenerateState : Error {
  using Error::Error;
};

// Inner Newton solve failed: iteration cap hit, non-finite residual, or
// the ellipticity guard 1 - 2*beta*f'(beta^2) stopped being positive.
struct NewtonDivergence : Error {
  using Error::Error;
};

// Adaptive step fell below 1e-14 without an acceptable step.
struct StepUnderflow : Error {
  using Error::Error;
};

// Integrated profile reached rho <= 0. Solutions provably stay off the
// axis, so this signals a solver bug rather than a property of the data.
struct AxisContact : Error {
  using Error::Error;
};

// Too few tail samples to fit the height asymptote.
struct InsufficientTail : Error {
  using Error::Error;
};

// Malformed or invalid run configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Output path could not be written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ewmt
