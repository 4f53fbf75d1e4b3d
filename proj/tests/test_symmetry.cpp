#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specsym/constructions.hpp"
#include "specsym/symmetry.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>

using namespace specsym;

namespace {

const Tolerance kTol{};

SpectrumMultiset multiset(std::initializer_list<Complex> values) {
    return SpectrumMultiset::canonical(std::vector<Complex>(values), kTol);
}

DenseOperator diag(const std::vector<Complex>& values) {
    const Eigen::Index n = static_cast<Eigen::Index>(values.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
    return DenseOperator{std::move(m)};
}

const Complex kOmega3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

}  // namespace

TEST_CASE("zd_symmetric_spectrum hand cases") {
    CHECK(zd_symmetric_spectrum(multiset({1.0, -1.0}), 2, kTol).verdict);

    const SpectrumMultiset quad = multiset({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(zd_symmetric_spectrum(quad, 4, kTol).verdict);

    const SymmetryReport r3 = zd_symmetric_spectrum(quad, 3, kTol);
    CHECK_FALSE(r3.verdict);
    REQUIRE(r3.witness_eigenvalue.has_value());
    // every witness comes from the original multiset
    bool found = false;
    for (const auto& e : quad.entries())
        found |= std::abs(e.value - *r3.witness_eigenvalue) < 1e-12;
    CHECK(found);
}

TEST_CASE("zd_symmetric_spectrum multiplicity mismatch") {
    const SymmetryReport r =
        zd_symmetric_spectrum(multiset({1.0, -1.0, -1.0}), 2, kTol);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.witness_eigenvalue.has_value());
    CHECK(std::abs(std::abs(r.witness_eigenvalue->real()) - 1.0) < 1e-12);
}

TEST_CASE("zeros are exempt from the orbit obligation") {
    CHECK(zd_symmetric_spectrum(multiset({0.0, 0.0, 1.0, -1.0}), 2, kTol).verdict);
    CHECK(zd_symmetric_spectrum(multiset({0.0, 0.0, 0.0}), 5, kTol).verdict);
    CHECK_FALSE(zd_symmetric_spectrum(multiset({0.0, 1.0}), 2, kTol).verdict);
}

TEST_CASE("verdicts are invariant under spectrum scaling") {
    const std::vector<Complex> base = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0.3, 0.2}};
    for (Complex c : {Complex(2.0), Complex(0.0, -0.5), Complex(1e-3, 1e-3)}) {
        for (int d : {2, 3, 4}) {
            std::vector<Complex> scaled;
            for (Complex v : base) scaled.push_back(c * v);
            const bool want =
                zd_symmetric_spectrum(SpectrumMultiset::canonical(base, kTol), d, kTol).verdict;
            const bool got =
                zd_symmetric_spectrum(SpectrumMultiset::canonical(scaled, kTol), d, kTol).verdict;
            CHECK(got == want);
        }
    }
}

TEST_CASE("generator sufficiency: all d rotations leave the multiset fixed") {
    const DenseOperator t = kronecker_symmetrize(DenseOperator{testutil::random_matrix(2, 5)}, 5);
    const SpectrumMultiset nz = nonzero_part(spectrum_of(t, kTol), kTol);
    REQUIRE(zd_symmetric_spectrum(spectrum_of(t, kTol), 5, kTol).verdict);
    for (int j = 1; j < 5; ++j) {
        std::vector<EigenvalueEntry> rotated = nz.entries();
        const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * j / 5.0);
        for (auto& e : rotated) e.value *= w;
        CHECK(multiset_equal(nz, SpectrumMultiset::canonical_weighted(rotated, kTol), kTol).equal);
    }
}

TEST_CASE("trace_criterion hand cases") {
    const TraceSequence ok = power_traces(diag({1.0, -1.0, 2.0, -2.0}), 12);
    CHECK(trace_criterion(ok, 2, 0, kTol).verdict);

    const TraceSequence bad = power_traces(diag({1.0, 1.0}), 8);
    const SymmetryReport r = trace_criterion(bad, 2, 0, kTol);
    CHECK_FALSE(r.verdict);
    CHECK(r.witness_index == 1);
}

TEST_CASE("trace-one family fails the criterion for every d") {
    // s_1 = 1 blocks symmetry regardless of d
    for (int n : {1, 4, 16}) {
        const DenseOperator t = trace_one_shrinking_family(n).op;
        for (int d : {2, 3, 5}) {
            const TraceSequence s = power_traces(t, default_trace_window(t.dim(), d));
            const SymmetryReport r = trace_criterion(s, d, 0, kTol);
            CHECK_FALSE(r.verdict);
            CHECK(r.witness_index == 1);
        }
    }
}

TEST_CASE("trace_criterion on a Kronecker d=3 construction") {
    const DenseOperator t =
        kronecker_symmetrize(DenseOperator{testutil::random_matrix(3, 41)}, 3);
    const TraceSequence s = power_traces(t, 27);
    CHECK(trace_criterion(s, 3, 0, kTol).verdict);
    double scale = 0.0;
    for (int n = 1; n <= 27; ++n) scale = std::max(scale, std::abs(s.at(n)));
    for (int n = 1; n <= 27; ++n)
        if (n % 3 != 0) CHECK(std::abs(s.at(n)) <= 1e-9 * scale);
}

TEST_CASE("trace_criterion explicit error on a too-short window") {
    const TraceSequence s = power_traces(diag({1.0, -1.0}), 5);
    CHECK_THROWS_AS(trace_criterion(s, 3, 1, kTol), std::invalid_argument);
    CHECK_NOTHROW(trace_criterion(s, 2, 1, kTol));
}

TEST_CASE("trace_criterion all-zero annotation for nilpotent windows") {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(3, 3);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    const TraceSequence s = power_traces(DenseOperator{std::move(j)}, 12);
    const SymmetryReport r = trace_criterion(s, 2, 0, kTol);
    CHECK(r.verdict);
    CHECK(r.all_zero_at_tolerance);
}

TEST_CASE("central_symmetry on hand cases") {
    CHECK(central_symmetry(diag({1.0, -1.0}), kTol).verdict);

    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2, 2);
    j(0, 1) = 1.0;
    const CentralSymmetry nil = central_symmetry(DenseOperator{std::move(j)}, kTol);
    CHECK(nil.verdict);
    CHECK(nil.spectral.verdict);
    CHECK(nil.trace.verdict);
    CHECK(nil.trace.all_zero_at_tolerance);
}

TEST_CASE("central_symmetry detects a diagonal shift on both routes") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const DenseOperator base =
            kronecker_symmetrize(testutil::random_operator(2, seed), 2);
        const DenseOperator shifted{base.mat() +
                                    0.01 * Eigen::MatrixXcd::Identity(base.dim(), base.dim())};
        const CentralSymmetry r = central_symmetry(shifted, kTol);
        CHECK_FALSE(r.verdict);
        CHECK_FALSE(r.spectral.verdict);
        CHECK_FALSE(r.trace.verdict);
        CHECK(r.spectral.witness_eigenvalue.has_value());
        CHECK(r.trace.witness_index == 1);
    }
}

TEST_CASE("central symmetry verdict equals the d=2 spectral verdict") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const DenseOperator t = (seed % 2 == 0)
            ? kronecker_symmetrize(testutil::random_operator(2, seed), 2)
            : testutil::random_operator(4, seed);
        const CentralSymmetry c = central_symmetry(t, kTol);
        const SymmetryReport s = zd_symmetric_spectrum(spectrum_of(t, kTol), 2, kTol);
        CHECK(c.verdict == s.verdict);
    }
}

TEST_CASE("equivalence_harness on a full cube-root orbit") {
    const EquivalenceReports r = equivalence_harness(diag({1.0, kOmega3, kOmega3 * kOmega3}), 3, kTol);
    CHECK(r.agree());
    CHECK(r.verdict());
}

TEST_CASE("equivalence_harness flags an incomplete orbit on all routes") {
    const EquivalenceReports r =
        equivalence_harness(diag({1.0, kOmega3, kOmega3 * kOmega3, 5.0}), 3, kTol);
    CHECK(r.agree());
    CHECK_FALSE(r.verdict());
    REQUIRE(r.spectral.witness_eigenvalue.has_value());
    CHECK(std::abs(*r.spectral.witness_eigenvalue - Complex(5.0)) < 1e-9);
    CHECK(r.determinant.witness_index.has_value());
    CHECK(r.trace.witness_index.has_value());
}

TEST_CASE("equivalence_harness randomized agreement campaign") {
    int disagreements = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int d = 2 + static_cast<int>(seed % 3);
        DenseOperator t = kronecker_symmetrize(testutil::random_operator(2, seed), d);
        if (seed % 2 == 0) t = perturb_break_symmetry(t, 0.05, seed * 31);
        try {
            const EquivalenceReports r = equivalence_harness(t, d, kTol);
            CHECK(r.verdict() == (seed % 2 == 1));
        } catch (const RouteDisagreement&) {
            ++disagreements;
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("equivalence_harness enforces the dimension cap") {
    CHECK_THROWS_AS(equivalence_harness(DenseOperator::identity(65), 2, kTol),
                    std::invalid_argument);
    CHECK_THROWS_AS(equivalence_harness(DenseOperator::identity(10), 2, kTol, 8),
                    std::invalid_argument);
}

TEST_CASE("symmetry survives coprime powers") {
    // a Z_d-symmetric spectrum stays Z_d-symmetric under T -> T^m, gcd(m, d) = 1
    for (int d : {2, 3, 4}) {
        const DenseOperator t = kronecker_symmetrize(testutil::random_operator(2, 17 + d), d);
        REQUIRE(zd_symmetric_spectrum(spectrum_of(t, kTol), d, kTol).verdict);
        for (int m : {3, 5, 7}) {
            if (m % d == 0) continue;
            if (std::gcd(m, d) != 1) continue;
            const SymmetryReport r =
                zd_symmetric_spectrum(spectrum_of(mat_pow(t, m), kTol), d, kTol);
            CHECK(r.verdict);
        }
    }
}

TEST_CASE("threshold collapse holds on symmetric constructions") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const int d = 2 + static_cast<int>(seed % 3);
        const DenseOperator t = kronecker_symmetrize(testutil::random_operator(2, seed), d);
        for (int K : {1, 2, 3}) {
            const CollapseCheck c = threshold_collapse_check(t, d, K, kTol);
            CHECK(c.held);
            CHECK_FALSE(c.vacuous);
        }
    }
}

TEST_CASE("threshold collapse flags the vacuous case") {
    const CollapseCheck c = threshold_collapse_check(diag({1.0, 1.0}), 2, 2, kTol);
    CHECK(c.held);
    CHECK(c.vacuous);
    CHECK_FALSE(c.at_K.verdict);
    CHECK_FALSE(c.at_zero.has_value());
}

TEST_CASE("odd traces vanish for centrally symmetric constructions") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const DenseOperator t = kronecker_symmetrize(testutil::random_operator(3, seed), 2);
        const int window = 3 * static_cast<int>(t.dim());
        const TraceSequence s = power_traces(t, window);
        double scale = 0.0;
        for (int n = 1; n <= window; ++n) scale = std::max(scale, std::abs(s.at(n)));
        for (int n = 1; n <= window; n += 2)
            CHECK(std::abs(s.at(n)) <= 1e-9 * scale);
    }
}
