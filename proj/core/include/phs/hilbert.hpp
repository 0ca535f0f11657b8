#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "phs/tolerances.hpp"

namespace phs {

using cplx = std::complex<double>;

/// Element of H* candidate space: a finite-dimensional complex amplitude
/// vector. Construction validates dim >= 1 and finiteness of every component.
class StateVector {
  public:
    explicit StateVector(std::vector<cplx> components);

    int dim() const { return static_cast<int>(components_.size()); }
    const std::vector<cplx>& components() const { return components_; }
    const cplx& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

    static StateVector basis(int dim, int index);
    static StateVector zero(int dim);

  private:
    std::vector<cplx> components_;
};

/// StateVector with ‖v‖ = 1 within norm_tol; the raw material of the unit
/// sphere S.
class UnitVector {
  public:
    explicit UnitVector(StateVector v, double norm_tol = kNormTol);

    int dim() const { return inner_.dim(); }
    const StateVector& vec() const { return inner_; }
    const std::vector<cplx>& components() const { return inner_.components(); }
    const cplx& operator[](int i) const { return inner_[i]; }

  private:
    StateVector inner_;
};

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(const cplx& a, const StateVector& v);

/// Hermitian inner product ⟨φ,ψ⟩, conjugate-linear in the FIRST argument
/// (physics convention; fixed once, binding everywhere).
cplx inner(const StateVector& a, const StateVector& b);
cplx inner(const UnitVector& a, const UnitVector& b);

double norm(const StateVector& v);
double distance(const StateVector& a, const StateVector& b);

/// φ / ‖φ‖. Throws ZeroVector when ‖φ‖ <= zero_tol (φ outside H*).
UnitVector normalize(const StateVector& v, double zero_tol = kZeroTol);

/// Deterministic Haar-like unit vector: standard complex Gaussian components,
/// then normalize. The distribution is invariant under unitary conjugation.
UnitVector random_unit(int dim, std::uint64_t seed);

/// Gram-Schmidt on seeded random vectors. Pairwise inner products vanish
/// within ortho_tol, norms are 1 within norm_tol. Throws CountExceedsDim for
/// count > dim.
std::vector<UnitVector> orthonormal_system(int dim, int count, std::uint64_t seed);

}  // namespace phs
