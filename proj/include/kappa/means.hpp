#pragma once

#include "kappa/spectral.hpp"

namespace kappa {

struct DistanceReport {
    double p = 0.0;
    double d = 0.0;
    double trace_arith = 0.0;   // Tr((A+B)/2)
    double trace_kappa = 0.0;   // Tr(A kappa_p B)
    double gap = 0.0;           // trace_arith - trace_kappa, recorded signed
    double condition_hint = 0.0;
};

// (A^{p/4} B^{p/2} A^{p/4})^{1/p}, formed as X X* with X = A^{p/4} B^{p/4}
// and symmetrized before the outer power.
PsdMatrix kappa_mean(const PsdMatrix& a, const PsdMatrix& b, double p);

// (A + B) / 2
PsdMatrix arith_mean(const PsdMatrix& a, const PsdMatrix& b);

DistanceReport d_p(const PsdMatrix& a, const PsdMatrix& b, double p);

// sqrt(2) * d_1 and sqrt(2) * d_2: the quantum Hellinger and Bures distances.
double hellinger(const PsdMatrix& a, const PsdMatrix& b);
double bures(const PsdMatrix& a, const PsdMatrix& b);

}  // namespace kappa
