#pragma once

#include <vector>

#include "phs/hilbert.hpp"
#include "phs/tolerances.hpp"

namespace phs {

/// Dense self-adjoint matrix, row-major complex storage. Oracle-side stand-in
/// for B_s(H) at finite dimension; construction enforces entry(i,j) =
/// conj(entry(j,i)) within hermitian_tol.
class HermitianMatrix {
  public:
    HermitianMatrix(int dim, std::vector<cplx> entries, double hermitian_tol = kHermitianTol);

    static HermitianMatrix zero(int dim);
    static HermitianMatrix identity(int dim);

    int dim() const { return dim_; }
    const cplx& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(j)];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    double trace() const;
    double frobenius_norm() const;

    /// A*A; Hermitian again.
    HermitianMatrix square() const;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

  private:
    int dim_;
    std::vector<cplx> entries_;
};

/// tr{AB} for Hermitian A, B (real up to rounding; the real part is returned).
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

/// Brute-force self-adjoint eigensolver: cyclic complex Jacobi rotations.
/// Runs sweeps until the off-diagonal Frobenius residual drops below
/// kOracleResidualTol * dim; throws ConvergenceFailure after `max_sweeps`.
/// Returns all eigenvalues sorted descending.
std::vector<double> dense_spectrum(const HermitianMatrix& m, int max_sweeps = 500);

/// max |λ| of a spectrum.
double operator_norm(const std::vector<double>& spectrum);

/// Σ |λ| of a spectrum.
double trace_norm(const std::vector<double>& spectrum);

}  // namespace phs
