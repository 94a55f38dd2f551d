#include "kappa/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"

namespace kappa {

namespace {

constexpr double kMaxExponent = 1e6;

void require_same_dim(const PsdMatrix& a, const PsdMatrix& b, const char* who) {
    if (a.dim() != b.dim()) throw DimensionMismatch(std::string(who) + ": dims differ");
}

void require_valid_p(double p, const char* who) {
    if (!std::isfinite(p) || p <= 0.0 || p > kMaxExponent)
        throw InvalidExponent(std::string(who) + ": p must be in (0, 1e6]");
}

double eig_ratio(const PsdMatrix& m) {
    const double lo = m.min_eigenvalue();
    return lo > 0.0 ? m.max_eigenvalue() / lo : std::numeric_limits<double>::infinity();
}

}  // namespace

PsdMatrix kappa_mean(const PsdMatrix& a, const PsdMatrix& b, double p) {
    require_same_dim(a, b, "kappa_mean");
    require_valid_p(p, "kappa_mean");
    const std::size_t n = a.dim();

    // X = A^{p/4} B^{p/4} in factored form: diag(la^{p/4}) (Ua* Ub) diag(lb^{p/4}).
    // The entrywise three-factor product keeps small singular values accurate
    // to relative precision, where forming X X* would drown them in round-off.
    const auto& ea = a.eig();
    const auto& eb = b.eig();
    std::vector<double> da(n), db(n);
    for (std::size_t i = 0; i < n; ++i) {
        da[i] = ea.eigenvalues[i] > 0.0 ? std::pow(ea.eigenvalues[i], p / 4.0) : 0.0;
        db[i] = eb.eigenvalues[i] > 0.0 ? std::pow(eb.eigenvalues[i], p / 4.0) : 0.0;
    }
    ComplexMatrix x = ea.vectors.adjoint() * eb.vectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) *= da[i] * db[j];

    // A kappa_p B = (X X*)^{1/p} = W diag(sigma^{2/p}) W* in the basis
    // Ua W of left singular vectors.
    const Svd svd = svd_one_sided(x);
    ComplexMatrix w = ea.vectors * svd.left;
    ComplexMatrix scaled = w;
    for (std::size_t j = 0; j < n; ++j) {
        const double f = svd.sigma[j] > 0.0 ? std::pow(svd.sigma[j], 2.0 / p) : 0.0;
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= f;
    }
    return PsdMatrix(HermitianMatrix(scaled * w.adjoint()));
}

PsdMatrix arith_mean(const PsdMatrix& a, const PsdMatrix& b) {
    require_same_dim(a, b, "arith_mean");
    ComplexMatrix sum = a.matrix() + b.matrix();
    sum *= 0.5;
    return PsdMatrix(HermitianMatrix(sum));
}

DistanceReport d_p(const PsdMatrix& a, const PsdMatrix& b, double p) {
    require_same_dim(a, b, "d_p");
    require_valid_p(p, "d_p");
    DistanceReport r;
    r.p = p;
    r.trace_arith = 0.5 * (a.trace() + b.trace());
    r.trace_kappa = kappa_mean(a, b, p).trace();
    r.gap = r.trace_arith - r.trace_kappa;
    if (r.gap < -1e-9 * std::max(1.0, r.trace_arith))
        throw NegativeGap("d_p: trace gap is negative beyond tolerance");
    r.d = std::sqrt(std::max(r.gap, 0.0));
    r.condition_hint = std::max(eig_ratio(a), eig_ratio(b));
    return r;
}

double hellinger(const PsdMatrix& a, const PsdMatrix& b) {
    return M_SQRT2 * d_p(a, b, 1.0).d;
}

double bures(const PsdMatrix& a, const PsdMatrix& b) {
    return M_SQRT2 * d_p(a, b, 2.0).d;
}

}  // namespace kappa
