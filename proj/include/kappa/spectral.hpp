#pragma once

#include <vector>

#include "kappa/matrix.hpp"

namespace kappa {

namespace tol {
inline constexpr double herm = 1e-12;       // Hermitian symmetry, relative
inline constexpr double psd = 1e-10;        // eigenvalue clamp, relative to max(1, lambda_max)
inline constexpr double reconstruct = 1e-11;
inline constexpr double jacobi_off = 1e-14; // off-diagonal target, relative
inline constexpr int jacobi_max_sweeps = 100;
}  // namespace tol

// Eigenvalues sorted descending (stable); columns of `vectors` are the
// matching orthonormal eigenvectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;

    ComplexMatrix reconstruct() const;
};

// A ComplexMatrix validated against ||M - M*||_F <= herm_tol * max(1, ||M||_F)
// and then symmetrized exactly to (M + M*)/2.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }
    double trace() const { return mat_.trace().real(); }

private:
    ComplexMatrix mat_;
};

// Cyclic complex Jacobi. Deterministic sweep order; throws NonConvergence if
// the off-diagonal mass is still above jacobi_off * ||M||_F after the sweep
// budget.
SpectralDecomposition hermitian_eig(const HermitianMatrix& m);

// Hermitian matrix whose spectrum passed the PSD check: eigenvalues below
// -psd_tol * max(1, lambda_max) are rejected, small negatives are clamped
// to zero. The decomposition is computed once and cached.
class PsdMatrix {
public:
    explicit PsdMatrix(const HermitianMatrix& m);
    explicit PsdMatrix(const ComplexMatrix& m) : PsdMatrix(HermitianMatrix(m)) {}

    const ComplexMatrix& matrix() const { return herm_.matrix(); }
    const HermitianMatrix& hermitian() const { return herm_; }
    const SpectralDecomposition& eig() const { return eig_; }
    std::size_t dim() const { return herm_.dim(); }
    double trace() const { return herm_.trace(); }

    double max_eigenvalue() const { return eig_.eigenvalues.front(); }
    double min_eigenvalue() const { return eig_.eigenvalues.back(); }
    bool strictly_positive() const;

private:
    HermitianMatrix herm_;
    SpectralDecomposition eig_;  // eigenvalues already clamped
};

}  // namespace kappa
