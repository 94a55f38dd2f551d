#include "kappa/norms.hpp"

#include <cmath>
#include <numeric>

#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"

namespace kappa {

NormSpec NormSpec::schatten(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw InvalidNormSpec("schatten exponent must be positive and finite");
    return {Kind::schatten, s, 0};
}

NormSpec NormSpec::kyfan(std::size_t k) {
    if (k == 0) throw InvalidNormSpec("kyfan order must be >= 1");
    return {Kind::kyfan, 0.0, k};
}

const char* NormSpec::kind_name() const {
    switch (kind) {
        case Kind::schatten: return "schatten";
        case Kind::kyfan: return "kyfan";
        case Kind::operator_norm: return "operator";
        case Kind::trace: return "trace";
    }
    return "?";
}

double norm(const ComplexMatrix& x, const NormSpec& spec) {
    const auto sv = singular_values(x);  // descending
    switch (spec.kind) {
        case NormSpec::Kind::schatten: {
            double acc = 0.0;
            for (double sigma : sv) acc += std::pow(sigma, spec.s);
            return std::pow(acc, 1.0 / spec.s);
        }
        case NormSpec::Kind::kyfan: {
            if (spec.k > sv.size())
                throw InvalidNormSpec("kyfan order exceeds matrix dimension");
            return std::accumulate(sv.begin(), sv.begin() + spec.k, 0.0);
        }
        case NormSpec::Kind::operator_norm:
            return sv.front();
        case NormSpec::Kind::trace:
            return std::accumulate(sv.begin(), sv.end(), 0.0);
    }
    throw InvalidNormSpec("unknown norm kind");
}

HolderMargin holder_check(const ComplexMatrix& a, const ComplexMatrix& b,
                          double alpha, double beta, double gamma,
                          const NormSpec& spec) {
    if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0))
        throw ExponentMismatch("holder_check: exponents must be positive");
    if (std::abs(1.0 / alpha + 1.0 / beta - 1.0 / gamma) > 1e-12)
        throw ExponentMismatch("holder_check: 1/alpha + 1/beta must equal 1/gamma");

    // |M|^t via the polar modulus and functional calculus
    const auto abs_pow = [](const ComplexMatrix& m, double t) {
        return matrix_power(polar_factors(m).modulus, t).matrix();
    };

    HolderMargin out;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma = gamma;
    out.lhs = std::pow(norm(abs_pow(a * b, gamma), spec), 1.0 / gamma);
    out.rhs = std::pow(norm(abs_pow(a, alpha), spec), 1.0 / alpha) *
              std::pow(norm(abs_pow(b, beta), spec), 1.0 / beta);
    out.margin = out.rhs - out.lhs;
    return out;
}

}  // namespace kappa
