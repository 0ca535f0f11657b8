#include "phs/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "phs/errors.hpp"

namespace phs {

HermitianMatrix::HermitianMatrix(int dim, std::vector<cplx> entries, double hermitian_tol)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) throw InvalidArgument("matrix dim must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw InvalidArgument("entry count does not match dim*dim");
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            const cplx upper = (*this)(i, j);
            const cplx lower = (*this)(j, i);
            if (std::abs(upper - std::conj(lower)) > hermitian_tol) throw NotHermitian();
            if (!std::isfinite(upper.real()) || !std::isfinite(upper.imag()))
                throw InvalidState("matrix has non-finite entry");
        }
    }
}

HermitianMatrix HermitianMatrix::zero(int dim) {
    return HermitianMatrix(
        dim, std::vector<cplx>(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    std::vector<cplx> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        e[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
          static_cast<std::size_t>(i)] = cplx{1.0, 0.0};
    return HermitianMatrix(dim, std::move(e));
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i).real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const cplx& c : entries_) acc += std::norm(c);
    return std::sqrt(acc);
}

HermitianMatrix HermitianMatrix::square() const {
    const int n = dim_;
    std::vector<cplx> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k) acc += (*this)(i, k) * (*this)(k, j);
            out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)] = acc;
        }
    }
    // Products of a matrix with itself stay Hermitian; pass a loose symmetry
    // tolerance to absorb rounding from the O(n) accumulations.
    return HermitianMatrix(n, std::move(out), 1e-9);
}

namespace {

HermitianMatrix combine(const HermitianMatrix& a, const HermitianMatrix& b,
                        const std::function<cplx(const cplx&, const cplx&)>& f) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    std::vector<cplx> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(a.entries()[i], b.entries()[i]);
    return HermitianMatrix(a.dim(), std::move(out));
}

}  // namespace

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return combine(a, b, [](const cplx& x, const cplx& y) { return x + y; });
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return combine(a, b, [](const cplx& x, const cplx& y) { return x - y; });
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    std::vector<cplx> out(a.entries());
    for (cplx& c : out) c *= s;
    return HermitianMatrix(a.dim(), std::move(out));
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    cplx acc{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) acc += a(i, j) * b(j, i);
    return acc.real();
}

namespace {

double off_diagonal_frobenius(const std::vector<cplx>& m, int n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc += std::norm(m[static_cast<std::size_t>(i) * n + j]);
    return std::sqrt(acc);
}

}  // namespace

std::vector<double> dense_spectrum(const HermitianMatrix& m, int max_sweeps) {
    const int n = m.dim();
    std::vector<cplx> a(m.entries());
    auto at = [&](int i, int j) -> cplx& { return a[static_cast<std::size_t>(i) * n + j]; };

    const double target = kOracleResidualTol * n;

    if (n == 1) return {at(0, 0).real()};

    int sweep = 0;
    while (off_diagonal_frobenius(a, n) >= target) {
        if (sweep++ >= max_sweeps)
            throw ConvergenceFailure("Jacobi sweeps exhausted before reaching residual target");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = at(p, q);
                const double mod = std::abs(apq);
                if (mod == 0.0) continue;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                // Unitary 2x2 elimination: strip the phase of a_pq, then the
                // classical symmetric rotation on the remaining real block.
                const cplx lambda = std::conj(apq) / mod;  // λ a_pq = |a_pq|
                const double tau = (aqq - app) / (2.0 * mod);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p and q of A <- A J, with J the identity except
                // J(p,p)=c, J(p,q)=s, J(q,p)=-λs, J(q,q)=λc.
                for (int i = 0; i < n; ++i) {
                    const cplx aip = at(i, p);
                    const cplx aiq = at(i, q);
                    at(i, p) = c * aip - s * (lambda * aiq);
                    at(i, q) = s * aip + c * (lambda * aiq);
                }
                // Rows p and q of A <- J^* A.
                for (int j = 0; j < n; ++j) {
                    const cplx apj = at(p, j);
                    const cplx aqj = at(q, j);
                    at(p, j) = c * apj - s * (std::conj(lambda) * aqj);
                    at(q, j) = s * apj + c * (std::conj(lambda) * aqj);
                }
                // The pivot pair is now diagonal up to rounding; pin it.
                at(p, q) = cplx{0.0, 0.0};
                at(q, p) = cplx{0.0, 0.0};
                at(p, p) = cplx{at(p, p).real(), 0.0};
                at(q, q) = cplx{at(q, q).real(), 0.0};
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

double operator_norm(const std::vector<double>& spectrum) {
    double m = 0.0;
    for (double v : spectrum) m = std::max(m, std::abs(v));
    return m;
}

double trace_norm(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double v : spectrum) s += std::abs(v);
    return s;
}

}  // namespace phs
