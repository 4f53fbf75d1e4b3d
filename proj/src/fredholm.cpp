#include "specsym/fredholm.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace specsym {

DetCoefficients::DetCoefficients(std::vector<Complex> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty() || alpha_[0] != Complex(1.0))
        throw std::invalid_argument("DetCoefficients: alpha[0] must be exactly 1");
    for (Complex a : alpha_)
        if (!is_finite(a))
            throw std::invalid_argument("DetCoefficients: non-finite coefficient");
}

DetCoefficients det_coeffs_from_traces(const TraceSequence& s) {
    const int n_max = s.n_max();
    std::vector<Complex> alpha(static_cast<std::size_t>(n_max) + 1);
    alpha[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        Complex acc = 0.0;
        double sign = 1.0;
        for (int j = 1; j <= n; ++j) {
            acc += sign * s.at(j) * alpha[static_cast<std::size_t>(n - j)];
            sign = -sign;
        }
        alpha[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
    }
    return DetCoefficients(std::move(alpha));
}

Complex det_eval_series(const DetCoefficients& c, Complex z) {
    // Horner on p(z) = sum (-1)^n alpha[n] z^n.
    Complex acc = 0.0;
    double sign = (c.max_index() % 2 == 0) ? 1.0 : -1.0;
    for (int n = c.max_index(); n >= 0; --n) {
        acc = acc * z + sign * c.at(n);
        sign = -sign;
    }
    return acc;
}

Complex det_eval_product(const SpectrumMultiset& spec, Complex tr, Complex z) {
    Complex acc = std::exp(-z * tr);
    for (const auto& e : spec.entries()) {
        const Complex factor = (Complex(1.0) - z * e.value) * std::exp(z * e.value);
        for (int k = 0; k < e.multiplicity; ++k) acc *= factor;
    }
    return acc;
}

SpectrumMultiset det_zeros(const DetCoefficients& c, const Tolerance& tol) {
    double max_alpha = 0.0;
    for (Complex a : c.alpha()) max_alpha = std::max(max_alpha, std::abs(a));
    const double thr = tol.threshold(max_alpha);

    int deg = c.max_index();
    while (deg > 0 && std::abs(c.at(deg)) <= thr) --deg;
    if (deg == 0) return {};

    // Reversed polynomial q(w) = w^deg p(1/w): its roots are the inverse
    // zeros, i.e. the nonzero eigenvalue candidates. Leading coefficient
    // is p's constant term, exactly 1.
    std::vector<Complex> q(static_cast<std::size_t>(deg) + 1);
    for (int m = 0; m <= deg; ++m) {
        const int n = deg - m;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        q[static_cast<std::size_t>(m)] = sign * c.at(n);
    }

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1.0;
    for (int i = 0; i < deg; ++i)
        comp(i, deg - 1) = -q[static_cast<std::size_t>(i)];  // q is monic
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("det_zeros: companion eigensolver did not converge");

    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(deg));
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        zeros.push_back(Complex(1.0) / solver.eigenvalues()[i]);
    return SpectrumMultiset::canonical(zeros, tol);
}

SpectrumMultiset reciprocal_multiset(const SpectrumMultiset& s, const Tolerance& tol) {
    std::vector<EigenvalueEntry> inv;
    inv.reserve(s.entries().size());
    for (const auto& e : s.entries()) {
        if (e.value == Complex(0.0))
            throw std::invalid_argument("reciprocal_multiset: zero entry");
        inv.push_back({Complex(1.0) / e.value, e.multiplicity});
    }
    return SpectrumMultiset::canonical_weighted(std::move(inv), tol);
}

DEvenCheck d_even_check(const DetCoefficients& c, int d, const Tolerance& tol) {
    if (d < 2)
        throw std::invalid_argument("d_even_check: d must be >= 2");
    double max_alpha = 0.0;
    for (Complex a : c.alpha()) max_alpha = std::max(max_alpha, std::abs(a));
    const double thr = tol.threshold(max_alpha);
    for (int n = 1; n <= c.max_index(); ++n) {
        if (n % d == 0) continue;
        if (std::abs(c.at(n)) > thr) return {false, n};
    }
    return {true, std::nullopt};
}

}  // namespace specsym
