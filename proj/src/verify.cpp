#include "kappa/verify.hpp"

#include <cmath>
#include <sstream>

#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"

namespace kappa {

InequalityReport check_trace_inequality(const PsdMatrix& a, const PsdMatrix& b, double p) {
    InequalityReport r;
    r.name = "trace";
    r.lhs = kappa_mean(a, b, p).trace();
    r.mid = std::sqrt(a.trace() * b.trace());
    r.rhs = arith_mean(a, b).trace();
    r.margins = {*r.mid - r.lhs, r.rhs - *r.mid};
    r.tolerance = 1e-9 * std::max(1.0, r.rhs);
    r.passed = r.margins[0] >= -r.tolerance && r.margins[1] >= -r.tolerance;
    return r;
}

InequalityReport check_uinorm_inequality(const PsdMatrix& a, const PsdMatrix& b, double p,
                                         const NormSpec& spec) {
    if (spec.quasi_norm())
        throw InvalidNormSpec("check_uinorm_inequality: quasi-norms are not genuine norms");
    InequalityReport r;
    r.name = spec.kind_name();
    const double na = norm(a.matrix(), spec);
    const double nb = norm(b.matrix(), spec);
    r.lhs = norm(kappa_mean(a, b, p).matrix(), spec);
    r.mid = std::sqrt(na * nb);
    r.rhs = 0.5 * (na + nb);
    r.margins = {*r.mid - r.lhs, r.rhs - *r.mid};
    r.tolerance = 1e-9 * std::max(1.0, r.rhs);
    r.passed = r.margins[0] >= -r.tolerance && r.margins[1] >= -r.tolerance;
    return r;
}

double check_triangle(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c, double p) {
    return d_p(a, c, p).d + d_p(c, b, p).d - d_p(a, b, p).d;
}

namespace {

ComplexMatrix real2x2(double m00, double m01, double m10, double m11) {
    ComplexMatrix m(2);
    m(0, 0) = m00;
    m(0, 1) = m01;
    m(1, 0) = m10;
    m(1, 1) = m11;
    return m;
}

}  // namespace

CounterexampleTriple counterexample_triple() {
    return {
        PsdMatrix(real2x2(4.0, 0.0, 0.0, 1.0)),
        PsdMatrix(real2x2(2.5, 1.5, 1.5, 2.5)),
        PsdMatrix(real2x2(25.0 / 8.0, 0.75, 0.75, 13.0 / 8.0)),
    };
}

CounterexampleReport reproduce_counterexample(bool throw_on_failure) {
    const auto [a, b, c] = counterexample_triple();

    // closed-form constants, evaluated from the radicals
    const double rt2 = std::sqrt(2.0);
    const double rt17 = std::sqrt(17.0);
    const double rt34 = std::sqrt(34.0);
    const double d2_ab_ref = 19.0 / 4.0 - 3.0 * rt2;
    const double d2_ac_ref = 5.0 / 4.0 + rt17 / 4.0 - 3.0 * rt2 / 4.0 - 3.0 * rt34 / 16.0;
    const double gap_ref = 3.0 * rt34 / 4.0 - rt17 - 0.25;
    const double tr_p2_ref = 0.25 + 3.0 * rt2;
    const double tr_q2_ref = 29.0 / 8.0 - rt17 / 4.0 + 3.0 * rt2 / 4.0 + 3.0 * rt34 / 16.0;
    const double margin_ref = 2.0 * std::sqrt(d2_ac_ref) - std::sqrt(d2_ab_ref);

    CounterexampleReport rep;
    const auto add = [&rep](std::string name, double computed, double reference, double tol) {
        CounterexampleCheck chk;
        chk.name = std::move(name);
        chk.computed = computed;
        chk.reference = reference;
        chk.deviation = std::abs(computed - reference);
        chk.tolerance = tol;
        chk.passed = chk.deviation <= tol;
        rep.checks.push_back(std::move(chk));
    };

    const auto rab = d_p(a, b, 0.5);
    const auto rac = d_p(a, c, 0.5);
    const auto rbc = d_p(b, c, 0.5);
    rep.d2_ab = rab.gap;
    rep.d2_ac = rac.gap;
    rep.d2_bc = rbc.gap;

    add("d2(A,B) = 19/4 - 3*sqrt(2)", rep.d2_ab, d2_ab_ref, 1e-10);
    add("d2(A,C) = 5/4 + sqrt(17)/4 - 3*sqrt(2)/4 - 3*sqrt(34)/16", rep.d2_ac, d2_ac_ref, 1e-10);
    add("d(B,C) = d(A,C)", rbc.d, rac.d, 1e-10);
    add("Tr(A k B) = 1/4 + 3*sqrt(2)", rab.trace_kappa, tr_p2_ref, 1e-10);
    add("Tr(A k C) = 29/8 - sqrt(17)/4 + 3*sqrt(2)/4 + 3*sqrt(34)/16", rac.trace_kappa,
        tr_q2_ref, 1e-10);
    add("d2(A,B) - 4*d2(A,C) = 3*sqrt(34)/4 - sqrt(17) - 1/4",
        rep.d2_ab - 4.0 * rep.d2_ac, gap_ref, 1e-10);
    add("gap identity positive", gap_ref > 0.0 ? 1.0 : 0.0, 1.0, 0.0);

    // structural identities
    const ComplexMatrix& cm = c.matrix();
    const double det_c = (cm(0, 0) * cm(1, 1) - cm(0, 1) * cm(1, 0)).real();
    add("det C = 289/64", det_c, 289.0 / 64.0, 0.0);

    const ComplexMatrix m0 =
        0.5 * (matrix_power(a, 0.5).matrix() + matrix_power(b, 0.5).matrix());
    add("C = ((sqrt(A)+sqrt(B))/2)^2", frobenius_distance(m0 * m0, cm), 0.0, 1e-12);

    ComplexMatrix u(2);
    u(0, 0) = u(0, 1) = u(1, 0) = M_SQRT1_2;
    u(1, 1) = -M_SQRT1_2;
    add("C = U C U^T", frobenius_distance(u * cm * u.adjoint(), cm), 0.0, 1e-12);

    rep.triangle_margin = check_triangle(a, b, c, 0.5);
    add("triangle margin", rep.triangle_margin, margin_ref, 1e-9);
    add("triangle margin negative", rep.triangle_margin < 0.0 ? 1.0 : 0.0, 1.0, 0.0);

    rep.passed = true;
    for (const auto& chk : rep.checks) rep.passed = rep.passed && chk.passed;

    if (!rep.passed && throw_on_failure) {
        std::ostringstream msg;
        msg << "counterexample reproduction failed:";
        for (const auto& chk : rep.checks)
            if (!chk.passed)
                msg << " [" << chk.name << " deviation " << chk.deviation << "]";
        throw ReproductionFailure(msg.str());
    }
    return rep;
}

}  // namespace kappa
