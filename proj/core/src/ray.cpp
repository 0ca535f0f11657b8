#include "phs/ray.hpp"

#include <cmath>

#include "phs/errors.hpp"

namespace phs {

Ray ray_of(const StateVector& v, double zero_tol, double pivot_tol) {
    UnitVector u = normalize(v, zero_tol);
    // Locate the pivot: first component with modulus above pivot_tol.
    int pivot = -1;
    for (int i = 0; i < u.dim(); ++i) {
        if (std::abs(u[i]) > pivot_tol) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw ZeroVector();  // unit vector must have a pivot
    const cplx p = u[pivot];
    const cplx phase = std::conj(p) / std::abs(p);
    std::vector<cplx> c(u.components());
    for (cplx& x : c) x *= phase;
    c[static_cast<std::size_t>(pivot)] = cplx{std::abs(p), 0.0};
    return Ray(UnitVector(StateVector(std::move(c))));
}

bool operator==(const Ray& a, const Ray& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        if (std::abs(a.rep()[i] - b.rep()[i]) > 1e-10) return false;
    }
    return true;
}

bool same_ray(const StateVector& a, const StateVector& b, double tol) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na <= kZeroTol || nb <= kZeroTol) throw ZeroVector();
    return std::abs(std::abs(inner(a, b)) - na * nb) <= tol * na * nb;
}

UnitVector phase_align(const UnitVector& v, const UnitVector& anchor, double zero_tol) {
    const cplx overlap = inner(v, anchor);
    const double mod = std::abs(overlap);
    if (mod <= zero_tol) throw OrthogonalStates();
    const cplx lambda = overlap / mod;
    return UnitVector(lambda * v.vec());
}

}  // namespace phs
