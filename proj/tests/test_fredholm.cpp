#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specsym/constructions.hpp"
#include "specsym/fredholm.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>

using namespace specsym;

namespace {

const Tolerance kTol{};

DenseOperator diag2(Complex a, Complex b) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return DenseOperator{std::move(m)};
}

DenseOperator nilpotent2() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    return DenseOperator{std::move(m)};
}

}  // namespace

TEST_CASE("recursion on the identity: det(1-z)^2 = 1 - 2z + z^2") {
    const DetCoefficients c =
        det_coeffs_from_traces(power_traces(DenseOperator::identity(2), 3));
    CHECK(c.at(0) == Complex(1.0));
    CHECK(std::abs(c.at(1) - Complex(2.0)) < 1e-15);
    CHECK(std::abs(c.at(2) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(c.at(3)) < 1e-15);
}

TEST_CASE("recursion on diag(1,-1): det = 1 - z^2, an even function") {
    const DetCoefficients c = det_coeffs_from_traces(power_traces(diag2(1.0, -1.0), 4));
    CHECK(std::abs(c.at(1)) < 1e-15);
    CHECK(std::abs(c.at(2) - Complex(-1.0)) < 1e-15);
    CHECK(std::abs(c.at(3)) < 1e-15);
    CHECK(std::abs(c.at(4)) < 1e-15);
}

TEST_CASE("recursion matches the polynomial-expansion oracle") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const DenseOperator t{testutil::random_matrix(6, seed)};
        const DetCoefficients c = det_coeffs_from_traces(power_traces(t, 6));
        const auto lambdas = testutil::eigenvalue_list(spectrum_of(t, kTol));
        const auto e = testutil::elementary_symmetric(lambdas);
        double max_alpha = 0.0;
        for (int n = 0; n <= 6; ++n) max_alpha = std::max(max_alpha, std::abs(c.at(n)));
        for (int n = 0; n <= 6; ++n)
            CHECK(std::abs(c.at(n) - e[static_cast<std::size_t>(n)]) <=
                  1e-8 * std::max(1.0, max_alpha));
    }
}

TEST_CASE("coefficients vanish beyond the source dimension") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Eigen::Index dim = 3 + static_cast<Eigen::Index>(seed % 4);
        const DenseOperator t = testutil::random_operator(dim, seed);
        const DetCoefficients c = det_coeffs_from_traces(power_traces(t, static_cast<int>(dim) + 6));
        double max_alpha = 0.0;
        for (int n = 0; n <= c.max_index(); ++n)
            max_alpha = std::max(max_alpha, std::abs(c.at(n)));
        for (int n = static_cast<int>(dim) + 1; n <= c.max_index(); ++n)
            CHECK(std::abs(c.at(n)) <= 1e-10 * std::max(1.0, max_alpha));
    }
}

TEST_CASE("series evaluation at an eigenvalue inverse vanishes") {
    const DetCoefficients c =
        det_coeffs_from_traces(power_traces(DenseOperator::identity(2), 2));
    CHECK(std::abs(det_eval_series(c, Complex(1.0))) < 1e-14);
}

TEST_CASE("series of a nilpotent source is constantly one") {
    const DetCoefficients c = det_coeffs_from_traces(power_traces(nilpotent2(), 4));
    for (Complex z : {Complex(0.3), Complex(-2.0, 5.0), Complex(100.0, -3.0)})
        CHECK(std::abs(det_eval_series(c, z) - Complex(1.0)) < 1e-13);
}

TEST_CASE("series equals the direct LU determinant of I - zT") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const DenseOperator t{testutil::random_matrix(4, seed)};
        const DetCoefficients c = det_coeffs_from_traces(power_traces(t, 4));
        const Complex z(0.3, 0.1);
        const Complex direct =
            (Eigen::MatrixXcd::Identity(4, 4) - z * t.mat()).determinant();
        CHECK(std::abs(det_eval_series(c, z) - direct) < 1e-10);
    }
}

TEST_CASE("product formula on hand values") {
    const SpectrumMultiset pm = SpectrumMultiset::canonical({{1.0, 0.0}, {-1.0, 0.0}}, kTol);
    CHECK(std::abs(det_eval_product(pm, Complex(0.0), Complex(2.0)) - Complex(-3.0)) < 1e-12);

    const SpectrumMultiset zeros =
        SpectrumMultiset::canonical({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}, kTol);
    for (Complex z : {Complex(0.5), Complex(-3.0, 1.0)})
        CHECK(std::abs(det_eval_product(zeros, Complex(0.0), z) - Complex(1.0)) < 1e-14);
}

TEST_CASE("series and product formulas agree at random points") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const DenseOperator t{testutil::random_matrix(5, seed)};
        const DetCoefficients c = det_coeffs_from_traces(power_traces(t, 5));
        const SpectrumMultiset spec = spectrum_of(t, kTol);
        const Complex tr = t.mat().trace();
        for (int k = 0; k < 20; ++k) {
            const Complex z(unit(rng), unit(rng));
            const Complex a = det_eval_series(c, z);
            const Complex b = det_eval_product(spec, tr, z);
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("det_zeros of diag(2,-2): zeros at ±1/2") {
    const DetCoefficients c = det_coeffs_from_traces(power_traces(diag2(2.0, -2.0), 2));
    CHECK(std::abs(c.at(2) - Complex(-4.0)) < 1e-14);
    const SpectrumMultiset zeros = det_zeros(c, kTol);
    REQUIRE(zeros.entries().size() == 2);
    CHECK(std::abs(zeros.entries()[0].value - Complex(-0.5)) < 1e-12);
    CHECK(std::abs(zeros.entries()[1].value - Complex(0.5)) < 1e-12);

    const SpectrumMultiset inv = reciprocal_multiset(zeros, kTol);
    CHECK(std::abs(inv.entries()[0].value - Complex(-2.0)) < 1e-11);
    CHECK(std::abs(inv.entries()[1].value - Complex(2.0)) < 1e-11);
}

TEST_CASE("det_zeros of a nilpotent source is empty") {
    const DetCoefficients c = det_coeffs_from_traces(power_traces(nilpotent2(), 4));
    CHECK(det_zeros(c, kTol).empty());
}

TEST_CASE("inverse zeros reproduce the nonzero spectrum") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const DenseOperator t{testutil::random_matrix(6, seed)};
        const DetCoefficients c = det_coeffs_from_traces(power_traces(t, 6));
        const SpectrumMultiset zeros = det_zeros(c, kTol);
        const Tolerance match{1e-6, 1e-12};
        const MatchResult m = multiset_equal(reciprocal_multiset(zeros, kTol),
                                             nonzero_part(spectrum_of(t, kTol), kTol), match);
        CHECK(m.equal);
    }
}

TEST_CASE("inverse zeros carry multiplicities for a Jordan block") {
    // J_3(0.8) plus two simple eigenvalues; cluster means are
    // coefficient-accurate, so a coarse remerge restores multiplicity 3.
    const DenseOperator t = testutil::jordan_operator(
        {{Complex(0.8, 0.3), 3}, {Complex(-1.2, 0.0), 1}, {Complex(0.2, -1.0), 1}}, 5);
    const DetCoefficients c = det_coeffs_from_traces(power_traces(t, 5));
    const Tolerance coarse{1e-2, 1e-12};
    const SpectrumMultiset inv =
        remerge(reciprocal_multiset(det_zeros(c, kTol), kTol), coarse);
    const SpectrumMultiset spec = remerge(nonzero_part(spectrum_of(t, kTol), kTol), coarse);
    CHECK(multiset_equal(inv, spec, Tolerance{1e-6, 1e-12}).equal);
    bool saw_triple = false;
    for (const auto& e : inv.entries()) saw_triple |= (e.multiplicity == 3);
    CHECK(saw_triple);
}

TEST_CASE("d_even_check on a full cube-root orbit") {
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = omega;
    m(2, 2) = omega * omega;
    const DetCoefficients c = det_coeffs_from_traces(power_traces(DenseOperator{std::move(m)}, 3));
    CHECK(std::abs(c.at(3) - Complex(1.0)) < 1e-14);  // det = 1 - z^3
    CHECK(d_even_check(c, 3, kTol).even);
}

TEST_CASE("d_even_check on diag(1,-1)") {
    const DetCoefficients c = det_coeffs_from_traces(power_traces(diag2(1.0, -1.0), 2));
    CHECK(d_even_check(c, 2, kTol).even);
    const DEvenCheck bad = d_even_check(c, 3, kTol);
    CHECK_FALSE(bad.even);
    CHECK(bad.first_violation == 2);
}

TEST_CASE("d_even_check on a Kronecker-symmetrized operator") {
    const DenseOperator a{testutil::random_matrix(3, 77)};
    const DenseOperator t = kronecker_symmetrize(a, 4);
    const DetCoefficients c =
        det_coeffs_from_traces(power_traces(t, static_cast<int>(t.dim())));
    CHECK(d_even_check(c, 4, kTol).even);
}

TEST_CASE("DetCoefficients validation") {
    CHECK_THROWS_AS(DetCoefficients({Complex(2.0)}), std::invalid_argument);
    CHECK_THROWS_AS(DetCoefficients({}), std::invalid_argument);
    CHECK_THROWS_AS(d_even_check(DetCoefficients({Complex(1.0)}), 1, kTol),
                    std::invalid_argument);
}
