#pragma once

namespace phs {

// Named tolerances, one record. Library functions default to these values;
// the CLI can override them per run.
inline constexpr double kNormTol = 1e-12;        // |‖v‖ - 1| for unit vectors
inline constexpr double kOrthoTol = 1e-10;       // off-diagonal Gram entries
inline constexpr double kZeroTol = 1e-300;       // ‖v‖ below this counts as the zero vector
inline constexpr double kPhasePivotTol = 1e-10;  // pivot modulus for the canonical phase
inline constexpr double kRayEqTol = 1e-10;       // |⟨φ,ψ⟩| = ‖φ‖‖ψ‖ slack for ray equality
inline constexpr double kHermitianTol = 1e-12;   // entry(i,j) vs conj(entry(j,i))
inline constexpr double kOracleResidualTol = 1e-12;  // per-dim off-diagonal Frobenius target

struct Tolerances {
    double norm_tol = kNormTol;
    double ortho_tol = kOrthoTol;
    double zero_tol = kZeroTol;
    double phase_pivot_tol = kPhasePivotTol;
    double ray_eq_tol = kRayEqTol;
    double hermitian_tol = kHermitianTol;
};

}  // namespace phs
