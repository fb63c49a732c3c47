#pragma once

#include <stdexcept>
#include <string>

namespace qmet {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// linalg
struct NotHermitian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };

// qubit
struct OutOfPlane : Error { using Error::Error; };
struct ZeroState : Error { using Error::Error; };
struct PoleAtUnitSz : Error { using Error::Error; };

// spinrep
struct BadAxis : Error { using Error::Error; };
struct BadFockIndex : Error { using Error::Error; };
struct OddNForTwinFock : Error { using Error::Error; };

// fisher
struct NotDensityMatrix : Error { using Error::Error; };
struct NotHermitianGenerator : Error { using Error::Error; };
struct InvalidPovm : Error { using Error::Error; };
struct SupportMismatch : Error { using Error::Error; };
struct ZeroProbabilityWithNonzeroDerivative : Error { using Error::Error; };

// werner
struct AlphaOutOfRange : Error { using Error::Error; };
struct AlphaZero : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };

// purestate
struct BreakdownMismatch : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// estimate
struct BadProbabilities : Error { using Error::Error; };
struct DegenerateLikelihood : Error { using Error::Error; };

}  // namespace qmet
