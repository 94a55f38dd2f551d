#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kappa/spectral.hpp"

namespace kappa {

// U diag(lambda_i^t) U*. Convention on clamped eigenvalues: 0^t = 0 for t > 0
// and 0^0 = 1. Negative t requires a strictly positive definite input.
PsdMatrix matrix_power(const PsdMatrix& a, double t);

struct PolarFactors {
    ComplexMatrix isometry;  // partial isometry U, zero columns on the kernel
    PsdMatrix modulus;       // |X| = (X*X)^{1/2}
};

// X = U |X| via hermitian_eig(X*X). U*U is the support projection of |X|.
PolarFactors polar_factors(const ComplexMatrix& x);

struct Svd {
    ComplexMatrix left;          // orthonormal columns; zero columns on the kernel
    std::vector<double> sigma;   // descending
    ComplexMatrix right;
};

// One-sided (Hestenes) Jacobi. Computes small singular values to high
// relative accuracy, which the Gram-matrix route cannot.
Svd svd_one_sided(const ComplexMatrix& x);

// sqrt of eigenvalues of X*X, clamped at 0, sorted descending.
std::vector<double> singular_values(const ComplexMatrix& x);

// Closed-form 2x2 principal square root:
// M^{1/2} = (M + sqrt(det M) I) / sqrt(Tr M + 2 sqrt(det M)).
PsdMatrix sqrt2x2_closed(const PsdMatrix& m);

// scale * G*G / dim with G a dim x dim matrix of standard complex Gaussian
// entries. The stream is mt19937_64 seeded by `seed`, raw 64-bit draws mapped
// to (0,1] and fed through Box-Muller, so identical arguments always produce
// bit-identical output.
PsdMatrix random_psd(std::size_t dim, std::uint64_t seed, double scale = 1.0);

// Same Gaussian stream, exposed for unitaries and perturbations.
ComplexMatrix random_complex_gaussian(std::size_t dim, std::uint64_t seed);
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed);
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace kappa
