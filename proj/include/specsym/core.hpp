// Core value types for spectral work: complex scalars, dense operators,
// tolerance policy, and the canonical eigenvalue multiset with its
// tolerance-aware matching.
//
// Everything here is an immutable value after construction and every
// function is pure, so concurrent use needs no synchronization.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace specsym {

using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Relative/absolute tolerance pair. The effective threshold for a
// comparison at scale sigma is max(abs, rel * sigma).
struct Tolerance {
    double rel = 1e-8;
    double abs = 1e-12;

    double threshold(double scale) const { return std::max(abs, rel * scale); }
};

// Square complex matrix with validated entries. Wraps an Eigen matrix;
// construction rejects non-square shapes and non-finite entries.
class DenseOperator {
public:
    explicit DenseOperator(Eigen::MatrixXcd entries);

    static DenseOperator identity(Eigen::Index dim);
    static DenseOperator zero(Eigen::Index dim);

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& mat() const { return mat_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

private:
    Eigen::MatrixXcd mat_;
};

// l_p norm of a complex vector, p in [1, inf].
double lp_norm(const Eigen::VectorXcd& v, double p);

// Conjugate exponent: 1/p + 1/p' = 1 (1 <-> inf, 2 <-> 2).
double conjugate_exponent(double p);

DenseOperator mat_mul(const DenseOperator& a, const DenseOperator& b);
DenseOperator mat_pow(const DenseOperator& t, int m);

struct EigenvalueEntry {
    Complex value;
    int multiplicity = 1;
};

// Unordered eigenvalue multiset in canonical merged form: values are
// clustered by single-linkage at the effective threshold, each cluster
// replaced by its multiplicity-weighted mean, entries sorted by
// (re, im). scale() is the largest modulus over the raw input.
class SpectrumMultiset {
public:
    SpectrumMultiset() = default;

    static SpectrumMultiset canonical(const std::vector<Complex>& values,
                                      const Tolerance& tol);
    static SpectrumMultiset canonical_weighted(std::vector<EigenvalueEntry> entries,
                                               const Tolerance& tol);

    const std::vector<EigenvalueEntry>& entries() const { return entries_; }
    double scale() const { return scale_; }
    int total_multiplicity() const;
    bool empty() const { return entries_.empty(); }

private:
    std::vector<EigenvalueEntry> entries_;
    double scale_ = 0.0;
};

// Re-cluster an existing multiset at a coarser tolerance. Useful when
// defective (multiple) eigenvalues come back from a solver as a tight
// cluster of simple ones.
SpectrumMultiset remerge(const SpectrumMultiset& s, const Tolerance& coarser);

// Entries with modulus above the effective threshold; zeros dropped.
SpectrumMultiset nonzero_part(const SpectrumMultiset& s, const Tolerance& tol);

// Thrown when the dense eigensolver fails to converge.
class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigenvalues of t merged into canonical multiset form. Total
// multiplicity always equals t.dim().
SpectrumMultiset spectrum_of(const DenseOperator& t, const Tolerance& tol);

struct MatchResult {
    bool equal = false;
    std::optional<Complex> witness;  // an eigenvalue without a partner
};

// True iff a perfect multiplicity-respecting matching pairs every
// eigenvalue of a with one of b within the effective threshold at
// scale max(a.scale, b.scale). Greedy nearest-neighbour first, exact
// assignment as fallback.
MatchResult multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b,
                           const Tolerance& tol);

}  // namespace specsym
