#pragma once

#include "phs/hilbert.hpp"
#include "phs/tolerances.hpp"

namespace phs {

/// Equivalence class [φ] of a nonzero vector under complex scaling, stored as
/// a canonical phase-fixed unit representative: the first component whose
/// modulus exceeds phase_pivot_tol is real and strictly positive.
class Ray {
  public:
    const UnitVector& rep() const { return rep_; }
    int dim() const { return rep_.dim(); }

    /// Componentwise comparison of canonical representatives within 1e-10.
    friend bool operator==(const Ray& a, const Ray& b);

  private:
    friend Ray ray_of(const StateVector& v, double zero_tol, double pivot_tol);
    explicit Ray(UnitVector rep) : rep_(std::move(rep)) {}
    UnitVector rep_;
};

/// Canonical projection μ: H* → P(H) (composed with β for unit vectors):
/// normalize, then strip the global phase. ray_of(αφ) = ray_of(φ) for α ≠ 0.
/// Throws ZeroVector for φ outside H*.
Ray ray_of(const StateVector& v, double zero_tol = kZeroTol,
           double pivot_tol = kPhasePivotTol);

/// True iff φ and ψ differ by a complex factor, i.e. |⟨φ,ψ⟩| = ‖φ‖‖ψ‖ within
/// tol. The inner-product criterion is authoritative (basis-independent);
/// canonical representatives are only a fast path.
bool same_ray(const StateVector& a, const StateVector& b, double tol = kRayEqTol);

/// Multiply φ by the phase factor λ = ⟨φ,φ₀⟩ / |⟨φ,φ₀⟩|. The result lies on
/// the ray of φ and, among all phase multiples of φ, minimizes the distance
/// to φ₀. Throws OrthogonalStates when |⟨φ,φ₀⟩| <= zero_tol.
UnitVector phase_align(const UnitVector& v, const UnitVector& anchor,
                       double zero_tol = kZeroTol);

}  // namespace phs
