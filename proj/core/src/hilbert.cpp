#include "phs/hilbert.hpp"

#include <cmath>

#include "phs/errors.hpp"
#include "phs/rng.hpp"

namespace phs {

namespace {

void require_same_dim(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

}  // namespace

StateVector::StateVector(std::vector<cplx> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidState("state vector must have dim >= 1");
    for (const cplx& c : components_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidState("state vector has non-finite component");
    }
}

StateVector StateVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) throw InvalidArgument("bad basis index");
    std::vector<cplx> c(static_cast<std::size_t>(dim), cplx{0.0, 0.0});
    c[static_cast<std::size_t>(index)] = cplx{1.0, 0.0};
    return StateVector(std::move(c));
}

StateVector StateVector::zero(int dim) {
    if (dim < 1) throw InvalidArgument("dim must be >= 1");
    std::vector<cplx> c(static_cast<std::size_t>(dim), cplx{0.0, 0.0});
    return StateVector(std::move(c));
}

UnitVector::UnitVector(StateVector v, double norm_tol) : inner_(std::move(v)) {
    const double n = norm(inner_);
    if (std::abs(n - 1.0) > norm_tol)
        throw InvalidState("unit vector norm deviates from 1: " + std::to_string(n));
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    require_same_dim(a, b);
    std::vector<cplx> c(a.components());
    for (int i = 0; i < a.dim(); ++i) c[static_cast<std::size_t>(i)] += b[i];
    return StateVector(std::move(c));
}

StateVector operator-(const StateVector& a, const StateVector& b) {
    require_same_dim(a, b);
    std::vector<cplx> c(a.components());
    for (int i = 0; i < a.dim(); ++i) c[static_cast<std::size_t>(i)] -= b[i];
    return StateVector(std::move(c));
}

StateVector operator*(const cplx& a, const StateVector& v) {
    std::vector<cplx> c(v.components());
    for (cplx& x : c) x *= a;
    return StateVector(std::move(c));
}

cplx inner(const StateVector& a, const StateVector& b) {
    require_same_dim(a, b);
    cplx acc{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

cplx inner(const UnitVector& a, const UnitVector& b) { return inner(a.vec(), b.vec()); }

double norm(const StateVector& v) {
    double acc = 0.0;
    for (const cplx& c : v.components()) acc += std::norm(c);
    return std::sqrt(acc);
}

double distance(const StateVector& a, const StateVector& b) { return norm(a - b); }

UnitVector normalize(const StateVector& v, double zero_tol) {
    const double n = norm(v);
    if (n <= zero_tol) throw ZeroVector();
    std::vector<cplx> c(v.components());
    for (cplx& x : c) x /= n;
    return UnitVector(StateVector(std::move(c)));
}

UnitVector random_unit(int dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidArgument("dim must be >= 1");
    Rng rng(seed);
    while (true) {
        std::vector<cplx> c(static_cast<std::size_t>(dim));
        for (cplx& x : c) x = rng.complex_gaussian();
        StateVector v(std::move(c));
        if (norm(v) <= 1e-12) continue;  // degenerate draw
        return normalize(v);
    }
}

std::vector<UnitVector> orthonormal_system(int dim, int count, std::uint64_t seed) {
    if (dim < 1 || count < 1) throw InvalidArgument("dim and count must be >= 1");
    if (count > dim) throw CountExceedsDim(count, dim);
    Rng rng(seed);
    std::vector<UnitVector> system;
    system.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(system.size()) < count) {
        std::vector<cplx> c(static_cast<std::size_t>(dim));
        for (cplx& x : c) x = rng.complex_gaussian();
        StateVector v(std::move(c));
        // Two Gram-Schmidt passes keep the Gram matrix at working precision
        // even for count = dim = 64.
        for (int pass = 0; pass < 2; ++pass) {
            for (const UnitVector& u : system) v = v - (inner(u.vec(), v) * u.vec());
        }
        if (norm(v) < 1e-6) continue;  // near-dependent draw, discard
        system.push_back(normalize(v));
    }
    return system;
}

}  // namespace phs
