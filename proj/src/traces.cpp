#include "specsym/traces.hpp"

#include <cmath>
#include <utility>

namespace specsym {

namespace {
constexpr double kPowerEntryCap = 1e140;
}

NuclearRepresentation::NuclearRepresentation(double ambient_p, Eigen::Index dim,
                                             std::vector<NuclearTerm> terms)
    : ambient_p_(ambient_p), dim_(dim), terms_(std::move(terms)) {
    if (!(ambient_p >= 1.0))
        throw std::invalid_argument("NuclearRepresentation: ambient_p must be >= 1");
    if (dim < 1)
        throw std::invalid_argument("NuclearRepresentation: dim must be >= 1");
    for (const auto& t : terms_) {
        if (t.functional.size() != dim_ || t.vec.size() != dim_)
            throw std::invalid_argument("NuclearRepresentation: term vector length != dim");
        if (!is_finite(t.mu))
            throw std::invalid_argument("NuclearRepresentation: non-finite coefficient");
        for (Eigen::Index i = 0; i < dim_; ++i)
            if (!is_finite(t.functional[i]) || !is_finite(t.vec[i]))
                throw std::invalid_argument("NuclearRepresentation: non-finite entry");
    }
}

NuclearRepresentation concat(const NuclearRepresentation& a,
                             const NuclearRepresentation& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("concat: dimension mismatch");
    if (a.ambient_p() != b.ambient_p())
        throw std::invalid_argument("concat: ambient exponent mismatch");
    std::vector<NuclearTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return NuclearRepresentation(a.ambient_p(), a.dim(), std::move(terms));
}

TraceSequence::TraceSequence(std::vector<Complex> values, Eigen::Index source_dim)
    : values_(std::move(values)), source_dim_(source_dim) {
    if (values_.empty())
        throw std::invalid_argument("TraceSequence: need at least one trace");
    if (source_dim_ < 1)
        throw std::invalid_argument("TraceSequence: source_dim must be >= 1");
    for (Complex v : values_)
        if (!is_finite(v))
            throw std::invalid_argument("TraceSequence: non-finite trace");
}

TraceSequence power_traces(const DenseOperator& t, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("power_traces: n_max must be >= 1");
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(n_max));
    Eigen::MatrixXcd power = t.mat();
    values.push_back(power.trace());
    for (int n = 2; n <= n_max; ++n) {
        power = power * t.mat();
        if (power.cwiseAbs().maxCoeff() > kPowerEntryCap)
            throw OverflowError(
                "power_traces: entries of T^" + std::to_string(n) +
                " exceed 1e140; rescale the operator before taking traces");
        values.push_back(power.trace());
    }
    return TraceSequence(std::move(values), t.dim());
}

Complex nuclear_trace(const NuclearRepresentation& u) {
    Complex acc = 0.0;
    for (const auto& t : u.terms())
        acc += t.mu * (t.functional.transpose() * t.vec).value();
    return acc;
}

DenseOperator induced_operator(const NuclearRepresentation& u) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(u.dim(), u.dim());
    for (const auto& t : u.terms())
        m += t.mu * (t.vec * t.functional.transpose());
    return DenseOperator(std::move(m));
}

double s_quasinorm(const NuclearRepresentation& u, double s) {
    if (!(s > 0.0) || s > 1.0)
        throw std::invalid_argument("s_quasinorm: s must lie in (0, 1]");
    const double p = u.ambient_p();
    const double q = conjugate_exponent(p);
    double acc = 0.0;
    for (const auto& t : u.terms())
        acc += std::pow(std::abs(t.mu) * lp_norm(t.functional, q) * lp_norm(t.vec, p), s);
    return std::pow(acc, 1.0 / s);
}

}  // namespace specsym
