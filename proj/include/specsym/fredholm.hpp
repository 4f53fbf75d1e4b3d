// Determinant coefficients from power traces via the Newton/Plemelj
// recursion, evaluation by series and by product over the spectrum, and
// recovery of eigenvalues as inverse zeros.
//
// Sign convention, pinned once: the coefficient of z^n in det(1 - zT)
// is (-1)^n alpha[n], so alpha[n] is the n-th elementary symmetric
// function of the eigenvalues and alpha[1] = trace T.

#pragma once

#include "specsym/core.hpp"
#include "specsym/traces.hpp"

namespace specsym {

// alpha[0..n], alpha[0] = 1. For a dim-dimensional source, alpha[n]
// vanishes (up to rounding) beyond n = dim.
class DetCoefficients {
public:
    explicit DetCoefficients(std::vector<Complex> alpha);

    int max_index() const { return static_cast<int>(alpha_.size()) - 1; }
    Complex at(int n) const { return alpha_.at(static_cast<std::size_t>(n)); }
    const std::vector<Complex>& alpha() const { return alpha_; }

private:
    std::vector<Complex> alpha_;
};

// alpha[n] = (1/n) sum_{j=1}^{n} (-1)^{j-1} s_j alpha[n-j].
DetCoefficients det_coeffs_from_traces(const TraceSequence& s);

// sum_n (-1)^n alpha[n] z^n. Exact value of det(I - zT) when the
// coefficients come from a dim-dimensional source with n_max >= dim.
Complex det_eval_series(const DetCoefficients& c, Complex z);

// e^{-z tr} prod_i ((1 - z lambda_i) e^{z lambda_i})^{mult_i}. In finite
// dimension tr equals the eigenvalue sum, so the exponentials cancel and
// the value is prod (1 - z lambda_i).
Complex det_eval_product(const SpectrumMultiset& spec, Complex tr, Complex z);

// Roots of sum_n (-1)^n alpha[n] z^n, merged into canonical multiset
// form. Trailing coefficients below the effective threshold at scale
// max|alpha| are trimmed first; the remaining polynomial is solved
// through the companion matrix of its reversal, whose eigenvalues are
// the inverse zeros directly. An all-zero polynomial beyond the
// constant term yields the empty multiset (spectrum {0}).
SpectrumMultiset det_zeros(const DetCoefficients& c, const Tolerance& tol);

// Entrywise reciprocal of a multiset (multiplicities kept). Maps det
// zeros to eigenvalue candidates and back.
SpectrumMultiset reciprocal_multiset(const SpectrumMultiset& s, const Tolerance& tol);

struct DEvenCheck {
    bool even = false;
    std::optional<int> first_violation;  // smallest n with d∤n and alpha[n] above threshold
};

// A power series is d-even exactly when only exponents divisible by d
// survive; checks alpha[n] ~ 0 at the threshold scaled by max|alpha|.
DEvenCheck d_even_check(const DetCoefficients& c, int d, const Tolerance& tol);

}  // namespace specsym
