#include <doctest.h>

#include <cmath>
#include <limits>

#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"
#include "kappa/spectral.hpp"

using namespace kappa;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

ComplexMatrix sym2(double m00, double m01, double m11) {
    ComplexMatrix m(2);
    m(0, 0) = m00;
    m(0, 1) = m01;
    m(1, 0) = m01;
    m(1, 1) = m11;
    return m;
}

}  // namespace

TEST_CASE("hermitian_eig: already-diagonal input") {
    auto sd = hermitian_eig(HermitianMatrix(diag2(4.0, 1.0)));
    CHECK(sd.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sd.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(frobenius_distance(sd.vectors, ComplexMatrix::identity(2)) < 1e-12);
}

TEST_CASE("hermitian_eig: 2x2 with known eigenvectors (1,1)/sqrt2, (1,-1)/sqrt2") {
    auto sd = hermitian_eig(HermitianMatrix(sym2(2.5, 1.5, 2.5)));
    CHECK(sd.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(sd.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
    // eigenvectors up to phase
    const double s = M_SQRT1_2;
    CHECK(std::abs(std::abs(sd.vectors(0, 0)) - s) < 1e-12);
    CHECK(std::abs(std::abs(sd.vectors(1, 0)) - s) < 1e-12);
    // column 0 entries have equal sign, column 1 opposite sign
    CHECK(std::real(sd.vectors(0, 0) * std::conj(sd.vectors(1, 0))) > 0.0);
    CHECK(std::real(sd.vectors(0, 1) * std::conj(sd.vectors(1, 1))) < 0.0);
}

TEST_CASE("hermitian_eig: random 5x5 roundtrip, seed 7") {
    ComplexMatrix h = random_hermitian(5, 7);
    auto sd = hermitian_eig(HermitianMatrix(h));
    const double scale = std::max(1.0, h.frobenius_norm());
    CHECK(frobenius_distance(sd.reconstruct(), HermitianMatrix(h).matrix()) <= 1e-11 * scale);
    // orthonormality
    CHECK(frobenius_distance(sd.vectors.adjoint() * sd.vectors, ComplexMatrix::identity(5)) <=
          1e-11 * 5);
}

TEST_CASE("hermitian_eig roundtrip property: 200 random Hermitian, dims 2-8") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::size_t dim = 2 + i % 7;
        ComplexMatrix h = random_hermitian(dim, 1000 + i);
        HermitianMatrix hm(h);
        auto sd = hermitian_eig(hm);
        const double scale = std::max(1.0, h.frobenius_norm());
        REQUIRE(frobenius_distance(sd.reconstruct(), hm.matrix()) <= 1e-11 * scale);
        for (std::size_t j = 0; j + 1 < dim; ++j)
            REQUIRE(sd.eigenvalues[j] >= sd.eigenvalues[j + 1]);
    }
}

TEST_CASE("HermitianMatrix rejects non-Hermitian and non-finite input") {
    ComplexMatrix m = sym2(1.0, 0.5, 1.0);
    m(0, 1) = 0.7;
    CHECK_THROWS_AS(HermitianMatrix{m}, NotHermitian);
    ComplexMatrix bad(2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(HermitianMatrix{bad}, NotFinite);
}

TEST_CASE("PsdMatrix rejects negative eigenvalues beyond tolerance") {
    CHECK_THROWS_AS(PsdMatrix{diag2(1.0, -0.5)}, NotPositiveSemidefinite);
}

TEST_CASE("matrix_power: diag(4,1)^{1/8} = diag(2^{1/4}, 1)") {
    auto r = matrix_power(PsdMatrix(diag2(4.0, 1.0)), 0.125);
    CHECK(r.matrix()(0, 0).real() == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    CHECK(r.matrix()(1, 1).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("matrix_power: t=1 is identity map") {
    PsdMatrix a = random_psd(4, 3, 1.0);
    auto r = matrix_power(a, 1.0);
    CHECK(frobenius_distance(r.matrix(), a.matrix()) <= 1e-12 * a.matrix().frobenius_norm());
}

TEST_CASE("matrix_power: cube of cube root roundtrip, seed 11 dim 4") {
    PsdMatrix a = random_psd(4, 11, 1.0);
    auto root = matrix_power(a, 1.0 / 3.0);
    ComplexMatrix cubed = root.matrix() * root.matrix() * root.matrix();
    CHECK(frobenius_distance(cubed, a.matrix()) <= 1e-9 * a.matrix().frobenius_norm());
}

TEST_CASE("matrix_power: error paths") {
    PsdMatrix singular(diag2(1.0, 0.0));
    CHECK_THROWS_AS(matrix_power(singular, -1.0), SingularPower);
    PsdMatrix a = random_psd(2, 1, 1.0);
    CHECK_THROWS_AS(matrix_power(a, std::numeric_limits<double>::quiet_NaN()), InvalidExponent);
    CHECK_THROWS_AS(matrix_power(a, std::numeric_limits<double>::infinity()), InvalidExponent);
}

TEST_CASE("matrix_power semigroup: (A^s)^t = A^{s*t}") {
    for (double s : {0.25, 0.5, 2.0}) {
        for (double t : {0.25, 0.5, 2.0}) {
            PsdMatrix a = random_psd(4, 21, 1.0);
            auto lhs = matrix_power(matrix_power(a, s), t);
            auto rhs = matrix_power(a, s * t);
            CHECK(frobenius_distance(lhs.matrix(), rhs.matrix()) <=
                  1e-9 * std::max(1.0, a.matrix().frobenius_norm()));
        }
    }
}

TEST_CASE("polar_factors: diagonal signs") {
    auto pf = polar_factors(diag2(3.0, -2.0));
    CHECK(pf.isometry(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pf.isometry(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pf.modulus.matrix()(0, 0).real() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(pf.modulus.matrix()(1, 1).real() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("polar_factors: P = A^{1/8} B^{1/4} A^{1/8} has Tr|P|^2 = 1/4 + 3 sqrt(2)") {
    PsdMatrix a(diag2(4.0, 1.0));
    PsdMatrix b(sym2(2.5, 1.5, 2.5));
    const ComplexMatrix a8 = matrix_power(a, 0.125).matrix();
    ComplexMatrix x = a8 * matrix_power(b, 0.25).matrix() * a8;
    auto pf = polar_factors(x);
    const ComplexMatrix mod2 = pf.modulus.matrix() * pf.modulus.matrix();
    CHECK(mod2.trace().real() == doctest::Approx(0.25 + 3.0 * M_SQRT2).epsilon(1e-12));
    CHECK(frobenius_distance(pf.isometry * pf.modulus.matrix(), x) <=
          1e-10 * std::max(1.0, x.frobenius_norm()));
    // XX* and X*X share their spectrum for non-Hermitian X too
    ComplexMatrix y = a8 * matrix_power(b, 0.25).matrix();
    auto sv = singular_values(y);
    auto svt = singular_values(y.adjoint());
    for (std::size_t j = 0; j < sv.size(); ++j) CHECK(std::abs(sv[j] - svt[j]) <= 1e-10);
}

TEST_CASE("polar_factors: zero matrix gives empty support") {
    auto pf = polar_factors(ComplexMatrix(2));
    CHECK(pf.isometry.frobenius_norm() == 0.0);
    CHECK(pf.modulus.matrix().frobenius_norm() == 0.0);
}

TEST_CASE("polar_factors: U*U is the support projection") {
    // rank-1 input
    ComplexMatrix x(2);
    x(0, 0) = 1.0;
    x(0, 1) = 1.0;
    auto pf = polar_factors(x);
    ComplexMatrix uu = pf.isometry.adjoint() * pf.isometry;
    // support of |X| for this X is the projection onto span{(1,1)/sqrt2}
    ComplexMatrix proj(2);
    proj(0, 0) = proj(0, 1) = proj(1, 0) = proj(1, 1) = 0.5;
    CHECK(frobenius_distance(uu, proj) < 1e-10);
    CHECK(frobenius_distance(pf.isometry * pf.modulus.matrix(), x) < 1e-10);
}

TEST_CASE("singular_values: identity and diagonal") {
    auto sv = singular_values(ComplexMatrix::identity(3));
    for (double s : sv) CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
    auto sv2 = singular_values(diag2(4.0, 1.0));
    CHECK(sv2[0] == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(sv2[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("XX* vs X*X isospectrality") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        PsdMatrix a = random_psd(4, 500 + 2 * i, 1.0);
        PsdMatrix b = random_psd(4, 501 + 2 * i, 1.0);
        const double p = 0.5 + 0.25 * static_cast<double>(i % 6);
        ComplexMatrix x = matrix_power(a, p / 4.0).matrix() * matrix_power(b, p / 4.0).matrix();
        auto sv = singular_values(x);
        auto svt = singular_values(x.adjoint());
        for (std::size_t j = 0; j < sv.size(); ++j)
            REQUIRE(std::abs(sv[j] - svt[j]) <= 1e-10);
    }
}

TEST_CASE("sqrt2x2_closed: identity, diagonal, and the (7/4,1/4;1/4,5/4) case") {
    auto ri = sqrt2x2_closed(PsdMatrix(ComplexMatrix::identity(2)));
    CHECK(frobenius_distance(ri.matrix(), ComplexMatrix::identity(2)) < 1e-14);

    auto rd = sqrt2x2_closed(PsdMatrix(diag2(4.0, 9.0)));
    CHECK(rd.matrix()(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rd.matrix()(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

    PsdMatrix m0(sym2(1.75, 0.25, 1.25));
    auto r = sqrt2x2_closed(m0);
    const double delta = std::sqrt(17.0 / 8.0);
    const double denom = std::sqrt(3.0 + 2.0 * delta);
    CHECK(r.matrix()(0, 0).real() == doctest::Approx((1.75 + delta) / denom).epsilon(1e-14));
    CHECK(r.matrix()(0, 1).real() == doctest::Approx(0.25 / denom).epsilon(1e-14));
    CHECK(r.matrix()(1, 1).real() == doctest::Approx((1.25 + delta) / denom).epsilon(1e-14));
    CHECK(frobenius_distance(r.matrix() * r.matrix(), m0.matrix()) <=
          1e-12 * std::max(1.0, m0.matrix().frobenius_norm()));
}

TEST_CASE("sqrt2x2_closed: error paths") {
    CHECK_THROWS_AS(sqrt2x2_closed(PsdMatrix(diag2(1.0, 0.0))), NotPositiveDefinite);
    CHECK_THROWS_AS(sqrt2x2_closed(random_psd(3, 0, 1.0)), DimensionMismatch);
}

TEST_CASE("sqrt2x2_closed agrees with spectral square root: 500 random PD inputs") {
    for (std::uint64_t i = 0; i < 500; ++i) {
        PsdMatrix m = random_psd(2, 9000 + i, 1.0);
        if (!m.strictly_positive()) continue;
        auto closed = sqrt2x2_closed(m);
        auto spectral = matrix_power(m, 0.5);
        REQUIRE(frobenius_distance(closed.matrix(), spectral.matrix()) <= 1e-11);
    }
}

TEST_CASE("random_psd: validation, determinism, 1x1 case") {
    for (std::uint64_t s : {0ULL, 1ULL, 42ULL}) {
        PsdMatrix m = random_psd(2, s, 1.0);
        CHECK(m.min_eigenvalue() >= 0.0);
    }
    PsdMatrix a = random_psd(4, 42, 1.0);
    PsdMatrix b = random_psd(4, 42, 1.0);
    CHECK(a.matrix().entries() == b.matrix().entries());  // bit-identical
    CHECK(a.trace() > 0.0);

    PsdMatrix scalar = random_psd(1, 0, 2.0);
    CHECK(scalar.matrix()(0, 0).real() >= 0.0);
    CHECK(scalar.matrix()(0, 0).imag() == 0.0);
}
