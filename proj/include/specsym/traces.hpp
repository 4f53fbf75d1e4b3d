// Power traces of dense operators, nuclear traces and s-quasinorms of
// finite rank-one-sum representations, and the representation ->
// operator map.
//
// The dual pairing used throughout is bilinear, <x', x> = sum_i x'_i x_i,
// with no complex conjugation: a sesquilinear pairing would corrupt the
// trace identities this library is built to check.

#pragma once

#include "specsym/core.hpp"

namespace specsym {

// One rank-one term mu * (functional (x) vector).
struct NuclearTerm {
    Complex mu;
    Eigen::VectorXcd functional;  // element of the dual, length dim
    Eigen::VectorXcd vec;         // element of the space, length dim
};

// Finite list of rank-one terms with an ambient exponent p. The ambient
// exponent only enters norm computations (the functional is measured in
// l_{p'}, the vector in l_p); the pairing and the induced matrix are
// purely algebraic.
class NuclearRepresentation {
public:
    NuclearRepresentation(double ambient_p, Eigen::Index dim,
                          std::vector<NuclearTerm> terms);

    double ambient_p() const { return ambient_p_; }
    Eigen::Index dim() const { return dim_; }
    const std::vector<NuclearTerm>& terms() const { return terms_; }

private:
    double ambient_p_;
    Eigen::Index dim_;
    std::vector<NuclearTerm> terms_;
};

// Term-list concatenation (trace is additive over it).
NuclearRepresentation concat(const NuclearRepresentation& a,
                             const NuclearRepresentation& b);

// The sequence trace T^n, n = 1 .. n_max().
class TraceSequence {
public:
    TraceSequence(std::vector<Complex> values, Eigen::Index source_dim);

    int n_max() const { return static_cast<int>(values_.size()); }
    Eigen::Index source_dim() const { return source_dim_; }
    Complex at(int n) const { return values_.at(static_cast<std::size_t>(n) - 1); }
    const std::vector<Complex>& values() const { return values_; }

private:
    std::vector<Complex> values_;
    Eigen::Index source_dim_;
};

// Thrown when a running power exceeds the floating range guard. The
// explicit failure replaces silently garbled trace tails.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// trace T^n for n = 1 .. n_max, by repeated multiplication (never from
// eigenvalues, so it can serve as an independent check against the
// eigenvalue route). Aborts with OverflowError once the running power
// has an entry above 1e140; rescale the operator if that happens.
TraceSequence power_traces(const DenseOperator& t, int n_max);

// sum_k mu_k <x'_k, x_k> with the bilinear pairing.
Complex nuclear_trace(const NuclearRepresentation& u);

// Matrix of the operator x |-> sum_k mu_k <x'_k, x> x_k.
DenseOperator induced_operator(const NuclearRepresentation& u);

// (sum_k |mu_k|^s ||x'_k||_{p'}^s ||x_k||_p^s)^{1/s} for s in (0, 1].
// This is the value of the given representation, not the infimum over
// all representations of the same element.
double s_quasinorm(const NuclearRepresentation& u, double s);

}  // namespace specsym
