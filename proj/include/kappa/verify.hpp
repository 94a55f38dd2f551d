#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappa/means.hpp"
#include "kappa/norms.hpp"

namespace kappa {

struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    std::optional<double> mid;
    double rhs = 0.0;
    std::vector<double> margins;
    bool passed = false;
    double tolerance = 0.0;
};

// Tr(A kappa_p B) <= sqrt(Tr A * Tr B) <= Tr((A+B)/2)
InequalityReport check_trace_inequality(const PsdMatrix& a, const PsdMatrix& b, double p);

// |||A kappa_p B||| <= |||A|||^{1/2} |||B|||^{1/2} <= (|||A||| + |||B|||)/2
InequalityReport check_uinorm_inequality(const PsdMatrix& a, const PsdMatrix& b, double p,
                                         const NormSpec& spec);

// d_p(A,C) + d_p(C,B) - d_p(A,B); negative means the triangle inequality fails.
double check_triangle(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c, double p);

// The built-in 2x2 triple for which the triangle inequality fails at p = 1/2.
struct CounterexampleTriple {
    PsdMatrix a, b, c;
};
CounterexampleTriple counterexample_triple();

struct CounterexampleCheck {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct CounterexampleReport {
    std::vector<CounterexampleCheck> checks;
    double d2_ab = 0.0;
    double d2_ac = 0.0;
    double d2_bc = 0.0;
    double triangle_margin = 0.0;  // negative: violation
    bool passed = false;
};

// Recomputes every quantity of the built-in counterexample and compares it
// against its exact closed form (radicals evaluated at run time). Throws
// ReproductionFailure listing the deviating checks when any exceeds 1e-10.
CounterexampleReport reproduce_counterexample(bool throw_on_failure = true);

}  // namespace kappa
