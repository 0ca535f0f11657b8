#pragma once

#include <utility>

#include "phs/hermitian.hpp"
#include "phs/hilbert.hpp"
#include "phs/ray.hpp"

namespace phs {

/// Pure state P_φ = |φ⟩⟨φ|, stored implicitly by its unit vector. The dense
/// matrix only ever exists oracle-side, via materialize().
class PureState {
  public:
    explicit PureState(UnitVector v) : vec_(std::move(v)) {}

    int dim() const { return vec_.dim(); }
    const UnitVector& vec() const { return vec_; }

    static PureState basis(int dim, int index) {
        return PureState(UnitVector(StateVector::basis(dim, index)));
    }
    static PureState random(int dim, std::uint64_t seed) {
        return PureState(random_unit(dim, seed));
    }

    /// P_φ = P_ψ iff the vectors lie on the same ray.
    friend bool operator==(const PureState& a, const PureState& b) {
        return same_ray(a.vec_.vec(), b.vec_.vec());
    }

  private:
    UnitVector vec_;
};

/// h_Q(P) = tr{PQ} = |⟨φ,ψ⟩|², clamped into [0,1]. Symmetric in P, Q.
double transition_probability(const PureState& p, const PureState& q);

/// Operator-norm distance ‖P - Q‖ = sqrt(1 - |⟨φ,ψ⟩|²), in closed form.
double rho_n(const PureState& p, const PureState& q);

/// Trace-norm distance ‖P - Q‖_tr = 2 ‖P - Q‖.
double rho_tr(const PureState& p, const PureState& q);

/// The two nonzero eigenvalues (λ₊, λ₋) of P - Q, λ₊ = -λ₋ =
/// sqrt(1 - |⟨φ,ψ⟩|²); (0, 0) when P = Q. Every other eigenvalue of P - Q
/// vanishes.
std::pair<double, double> diff_eigenvalues(const PureState& p, const PureState& q);

/// Dense |φ⟩⟨φ| with entries (i,j) = φ_i conj(φ_j); oracle input only.
HermitianMatrix materialize(const PureState& p);

struct NormBoundCheck {
    double lhs;  // ‖P_φ - P_ψ‖
    double rhs;  // ‖φ - ψ‖
    bool holds;  // lhs <= rhs + 1e-12
};

/// Continuity bound of the sphere-to-projector map: ‖P_φ - P_ψ‖ ≤ ‖φ - ψ‖.
NormBoundCheck norm_bound_check(const UnitVector& a, const UnitVector& b);

}  // namespace phs
