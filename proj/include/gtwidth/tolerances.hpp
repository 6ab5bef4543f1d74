#pragma once

namespace gtwidth::tol {

/// Default numeric tolerances of the floating-point verification lane.
/// The exact-arithmetic lane uses none. All of these are overridable where
/// the CLI exposes the corresponding check.
inline constexpr double kMembership = 1e-8;   // polytope slack for sampled points
inline constexpr double kSpectrum = 1e-10;    // spectra of distinguished matrices
inline constexpr double kConstantCheck = 1e-8;  // sampled values of constant functions
inline constexpr double kJacobian = 1e-7;     // symplecticity residual of the disc map
inline constexpr double kPsiStep = 1e-6;      // central-difference step
// The sqrt factor makes third derivatives blow up near y = 0; sampling
// stays this far inside the simplex so the central-difference bias sits
// well under kJacobian.
inline constexpr double kPsiMarginY = 0.05;
inline constexpr double kPsiMarginX = 1e-3;

}  // namespace gtwidth::tol
