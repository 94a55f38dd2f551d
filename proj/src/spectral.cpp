#include "kappa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kappa/errors.hpp"

namespace kappa {

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const std::size_t n = vectors.dim();
    ComplexMatrix scaled = vectors;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
    return scaled * vectors.adjoint();
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : mat_(m) {
    if (!m.all_finite()) throw NotFinite("matrix has non-finite entries");
    const double scale = std::max(1.0, m.frobenius_norm());
    double asym = 0.0;
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            asym += std::norm(m(i, j) - std::conj(m(j, i)));
    if (std::sqrt(asym) > tol::herm * scale)
        throw NotHermitian("||M - M*||_F exceeds Hermitian tolerance");
    for (std::size_t i = 0; i < n; ++i) {
        mat_(i, i) = mat_(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
            mat_(i, j) = v;
            mat_(j, i) = std::conj(v);
        }
    }
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

SpectralDecomposition hermitian_eig(const HermitianMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = tol::jacobi_off * std::max(a.frobenius_norm(), 1e-300);

    int sweep = 0;
    while (offdiag_norm(a) > target) {
        if (sweep++ >= tol::jacobi_max_sweeps)
            throw NonConvergence("Jacobi eigensolver: off-diagonal mass not reduced within sweep budget");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Solve t^2 - 2*tau*t - 1 = 0 for the smaller root.
                const double tau = (aqq - app) / (2.0 * mag);
                const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;          // appears in row updates
                const cplx spc = s * std::conj(phase);
                // A <- G* A G with G = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + spc * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -spc * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + spc * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

PsdMatrix::PsdMatrix(const HermitianMatrix& m) : herm_(m), eig_(hermitian_eig(m)) {
    const double scale = std::max(1.0, herm_.matrix().frobenius_norm());
    if (frobenius_distance(eig_.reconstruct(), herm_.matrix()) > tol::reconstruct * scale)
        throw NonConvergence("spectral reconstruction error above tolerance");
    const double lmax = eig_.eigenvalues.empty() ? 0.0 : eig_.eigenvalues.front();
    const double floor = -tol::psd * std::max(1.0, lmax);
    for (double& lambda : eig_.eigenvalues) {
        if (lambda < floor)
            throw NotPositiveSemidefinite("eigenvalue below PSD tolerance");
        if (lambda < 0.0) lambda = 0.0;
    }
}

bool PsdMatrix::strictly_positive() const {
    const double lmax = max_eigenvalue();
    return min_eigenvalue() > tol::psd * std::max(1.0, lmax);
}

}  // namespace kappa
