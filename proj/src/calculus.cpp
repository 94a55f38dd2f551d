#include "kappa/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

ComplexMatrix apply_spectrum(const SpectralDecomposition& sd, const std::vector<double>& f) {
    const std::size_t n = sd.vectors.dim();
    ComplexMatrix scaled = sd.vectors;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= f[j];
    return scaled * sd.vectors.adjoint();
}

}  // namespace

PsdMatrix matrix_power(const PsdMatrix& a, double t) {
    if (!std::isfinite(t)) throw InvalidExponent("matrix_power: exponent not finite");
    if (t < 0.0 && !a.strictly_positive())
        throw SingularPower("matrix_power: negative exponent on singular matrix");
    const auto& sd = a.eig();
    std::vector<double> powered(sd.eigenvalues.size());
    for (std::size_t i = 0; i < powered.size(); ++i) {
        const double lambda = sd.eigenvalues[i];
        if (lambda == 0.0) {
            if (t < 0.0)
                throw SingularPower("matrix_power: negative exponent on singular matrix");
            powered[i] = (t == 0.0) ? 1.0 : 0.0;
        } else {
            powered[i] = std::pow(lambda, t);
        }
    }
    return PsdMatrix(HermitianMatrix(apply_spectrum(sd, powered)));
}

PolarFactors polar_factors(const ComplexMatrix& x) {
    const std::size_t n = x.dim();
    PsdMatrix gram(HermitianMatrix(x.adjoint() * x));
    const auto& sd = gram.eig();
    std::vector<double> sigma(n), inv_sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        sigma[i] = std::sqrt(sd.eigenvalues[i]);
        inv_sigma[i] = sigma[i] > 0.0 ? 1.0 / sigma[i] : 0.0;
    }
    PsdMatrix modulus{HermitianMatrix(apply_spectrum(sd, sigma))};
    // U = X V diag(1/sigma, or 0 on the kernel) V*
    ComplexMatrix isometry = x * apply_spectrum(sd, inv_sigma);
    return PolarFactors{std::move(isometry), std::move(modulus)};
}

Svd svd_one_sided(const ComplexMatrix& x) {
    const std::size_t n = x.dim();
    ComplexMatrix a = x;  // columns become u_j * sigma_j
    ComplexMatrix v = ComplexMatrix::identity(n);

    const auto col_dot = [&](const ComplexMatrix& m, std::size_t i, std::size_t j) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += std::conj(m(k, i)) * m(k, j);
        return acc;
    };
    const auto col_norm2 = [&](const ComplexMatrix& m, std::size_t j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += std::norm(m(k, j));
        return acc;
    };

    int sweep = 0;
    bool converged = false;
    while (!converged) {
        if (sweep++ >= tol::jacobi_max_sweeps)
            throw NonConvergence("one-sided Jacobi SVD: columns not orthogonal within sweep budget");
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx ip = col_dot(a, p, q);
                const double mag = std::abs(ip);
                const double np = col_norm2(a, p);
                const double nq = col_norm2(a, q);
                if (np == 0.0 || nq == 0.0 || mag <= 1e-15 * std::sqrt(np * nq)) continue;
                converged = false;
                const cplx phase = ip / mag;
                const double tau = (nq - np) / (2.0 * mag);
                const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;
                const cplx spc = s * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + spc * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + spc * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(col_norm2(a, j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    Svd out;
    out.sigma.resize(n);
    out.left = ComplexMatrix(n);
    out.right = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = sigma[src];
        const double inv = sigma[src] > 0.0 ? 1.0 / sigma[src] : 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            out.left(i, j) = a(i, src) * inv;
            out.right(i, j) = v(i, src);
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& x) {
    return svd_one_sided(x).sigma;
}

PsdMatrix sqrt2x2_closed(const PsdMatrix& m) {
    if (m.dim() != 2) throw DimensionMismatch("sqrt2x2_closed: input must be 2x2");
    const ComplexMatrix& a = m.matrix();
    const double tr = m.trace();
    const cplx detc = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double det = detc.real();
    if (det <= 0.0 || tr <= 0.0)
        throw NotPositiveDefinite("sqrt2x2_closed: input must be positive definite");
    const double delta = std::sqrt(det);
    ComplexMatrix root = a + delta * ComplexMatrix::identity(2);
    root *= 1.0 / std::sqrt(tr + 2.0 * delta);
    return PsdMatrix(HermitianMatrix(root));
}

namespace {

// Raw mt19937_64 draws mapped into (0,1], then Box-Muller. Avoids
// std::normal_distribution, whose output is not pinned by the standard.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double uniform() {
        // (0,1]: never 0, so log() below is safe
        return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    cplx complex_normal() {
        // unit-variance complex Gaussian
        const double re = normal() * M_SQRT1_2;
        const double im = normal() * M_SQRT1_2;
        return {re, im};
    }

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

ComplexMatrix random_complex_gaussian(std::size_t dim, std::uint64_t seed) {
    GaussianStream g(seed);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = g.complex_normal();
    return m;
}

PsdMatrix random_psd(std::size_t dim, std::uint64_t seed, double scale) {
    if (dim == 0) throw DimensionMismatch("random_psd: dim must be >= 1");
    if (!(scale > 0.0)) throw ConfigError("random_psd: scale must be positive");
    ComplexMatrix g = random_complex_gaussian(dim, seed);
    ComplexMatrix w = g.adjoint() * g;
    w *= scale / static_cast<double>(dim);
    return PsdMatrix(HermitianMatrix(w));
}

ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    ComplexMatrix g = random_complex_gaussian(dim, seed);
    ComplexMatrix h = g + g.adjoint();
    h *= 0.5;
    return h;
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    // Gram-Schmidt on a Gaussian matrix's columns
    ComplexMatrix g = random_complex_gaussian(dim, seed);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm += std::norm(g(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < dim; ++i) g(i, j) /= norm;
    }
    return g;
}

}  // namespace kappa
