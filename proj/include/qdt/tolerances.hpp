#pragma once

// Default numeric tolerances, shared across the engine. Per-quantity
// identities are held to kIdentityTol; aggregate normalization sums get the
// looser kAggregateTol because they accumulate over the whole basis.
namespace qdt {

inline constexpr double kIdentityTol = 1.0e-12;
inline constexpr double kAggregateTol = 1.0e-10;

// Calibration promises to reproduce requested partials/interference values
// to this residual (the solver itself converges much tighter).
inline constexpr double kCalibrationTol = 1.0e-9;

// Strict inequalities evaluated inside this band are reported as "boundary"
// rather than as a hard true/false.
inline constexpr double kBoundaryBand = 1.0e-10;

// Composite probabilities this small cannot be divided by meaningfully.
inline constexpr double kDenominatorFloor = 1.0e-14;

}  // namespace qdt
