#pragma once

#include <cstddef>

#include "kappa/matrix.hpp"

namespace kappa {

// A unitarily invariant norm, evaluated on singular values.
struct NormSpec {
    enum class Kind { schatten, kyfan, operator_norm, trace };

    Kind kind = Kind::trace;
    double s = 1.0;     // schatten exponent
    std::size_t k = 1;  // kyfan order

    static NormSpec schatten(double s);
    static NormSpec kyfan(std::size_t k);
    static NormSpec operator_norm() { return {Kind::operator_norm, 0.0, 0}; }
    static NormSpec trace_norm() { return {Kind::trace, 0.0, 0}; }

    // schatten with 0 < s < 1: the triangle inequality is not assumed
    bool quasi_norm() const { return kind == Kind::schatten && s < 1.0; }

    const char* kind_name() const;
};

double norm(const ComplexMatrix& x, const NormSpec& spec);

struct HolderMargin {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs; negative would indicate a bug
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

// |||AB|^gamma|||^{1/gamma} <= |||A|^alpha|||^{1/alpha} * |||B|^beta|||^{1/beta}
// with 1/alpha + 1/beta = 1/gamma.
HolderMargin holder_check(const ComplexMatrix& a, const ComplexMatrix& b,
                          double alpha, double beta, double gamma,
                          const NormSpec& spec);

}  // namespace kappa
