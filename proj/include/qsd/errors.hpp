#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

/// Base class for all domain-level failures raised by the toolkit.
/// The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A Bloch vector left the unit ball.
class BallViolation : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A matrix failed the density-matrix invariants (Hermitian, unit trace, PSD).
class InvalidState : public DomainError {
  public:
    using DomainError::DomainError;
};

/// The two states coincide; no flag direction or discrimination question exists.
class DegenerateScenario : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Steering components do not average to the purified state's Bob marginal.
class MismatchedAverage : public DomainError {
  public:
    using DomainError::DomainError;
};

/// The ensemble average is too close to a pure state to invert its square root.
class NearSingularAverage : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A measurement outcome has vanishing probability; its conditional state is undefined.
class ZeroProbability : public DomainError {
  public:
    using DomainError::DomainError;
};

}  // namespace qsd
