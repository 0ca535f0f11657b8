#include "phs/projector.hpp"

#include <algorithm>
#include <cmath>

#include "phs/errors.hpp"

namespace phs {

double transition_probability(const PureState& p, const PureState& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch(p.dim(), q.dim());
    const double h = std::norm(inner(q.vec(), p.vec()));
    return std::clamp(h, 0.0, 1.0);
}

double rho_n(const PureState& p, const PureState& q) {
    return std::sqrt(1.0 - transition_probability(p, q));
}

double rho_tr(const PureState& p, const PureState& q) { return 2.0 * rho_n(p, q); }

std::pair<double, double> diff_eigenvalues(const PureState& p, const PureState& q) {
    if (p == q) return {0.0, 0.0};
    const double lambda = rho_n(p, q);
    return {lambda, -lambda};
}

HermitianMatrix materialize(const PureState& p) {
    const int n = p.dim();
    std::vector<cplx> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j)] = p.vec()[i] * std::conj(p.vec()[j]);
    return HermitianMatrix(n, std::move(e));
}

NormBoundCheck norm_bound_check(const UnitVector& a, const UnitVector& b) {
    const double lhs = rho_n(PureState(a), PureState(b));
    const double rhs = distance(a.vec(), b.vec());
    return {lhs, rhs, lhs <= rhs + 1e-12};
}

}  // namespace phs
