#include "specsym/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace specsym {

namespace {

std::string witness_text(const SymmetryReport& r) {
    std::ostringstream os;
    if (r.witness_eigenvalue)
        os << "eigenvalue (" << r.witness_eigenvalue->real() << ", "
           << r.witness_eigenvalue->imag() << ")";
    else if (r.witness_index)
        os << "index " << *r.witness_index;
    else
        os << "none";
    return os.str();
}

std::string disagreement_text(const SymmetryReport& a, const SymmetryReport& b) {
    std::ostringstream os;
    os << "route disagreement: " << route_name(a.route) << " says "
       << (a.verdict ? "symmetric" : "asymmetric") << " (witness " << witness_text(a)
       << "), " << route_name(b.route) << " says "
       << (b.verdict ? "symmetric" : "asymmetric") << " (witness " << witness_text(b)
       << ")";
    return os.str();
}

}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::spectral: return "spectral";
        case Route::trace_criterion: return "trace-criterion";
        case Route::determinant: return "determinant";
    }
    return "unknown";
}

int default_trace_window(Eigen::Index dim, int d) {
    const long w = 3L * static_cast<long>(dim) * d;
    return static_cast<int>(std::min(w, 512L));
}

SymmetryReport zd_symmetric_spectrum(const SpectrumMultiset& spec, int d,
                                     const Tolerance& tol) {
    if (d < 2)
        throw std::invalid_argument("zd_symmetric_spectrum: d must be >= 2");
    SymmetryReport report;
    report.d = d;
    report.route = Route::spectral;
    report.tol = tol;

    const SpectrumMultiset nonzero = nonzero_part(spec, tol);
    if (nonzero.empty()) {
        report.verdict = true;  // all-zero spectrum is symmetric for every d
        return report;
    }

    const double angle = 2.0 * std::numbers::pi / d;
    const Complex generator = std::polar(1.0, angle);
    std::vector<EigenvalueEntry> rotated = nonzero.entries();
    for (auto& e : rotated) e.value *= generator;
    const SpectrumMultiset rotated_set =
        SpectrumMultiset::canonical_weighted(std::move(rotated), tol);

    const MatchResult match = multiset_equal(nonzero, rotated_set, tol);
    report.verdict = match.equal;
    if (!match.equal)
        report.witness_eigenvalue = match.witness.value_or(nonzero.entries().front().value);
    return report;
}

SymmetryReport trace_criterion(const TraceSequence& s, int d, int K,
                               const Tolerance& tol) {
    if (d < 2)
        throw std::invalid_argument("trace_criterion: d must be >= 2");
    if (K < 0)
        throw std::invalid_argument("trace_criterion: K must be >= 0");
    const int n_max = s.n_max();
    if (n_max < (K + 1) * d)
        throw std::invalid_argument(
            "trace_criterion: window too short, need n_max >= (K+1)*d = " +
            std::to_string((K + 1) * d) + " but have " + std::to_string(n_max));

    SymmetryReport report;
    report.d = d;
    report.route = Route::trace_criterion;
    report.threshold_K = K;
    report.tol = tol;
    report.n_max = n_max;

    double scale = 0.0;
    for (int n = 1; n <= n_max; ++n) scale = std::max(scale, std::abs(s.at(n)));
    if (scale <= tol.abs) {
        report.verdict = true;
        report.all_zero_at_tolerance = true;  // nilpotent-at-tolerance window
        return report;
    }
    const double thr = tol.threshold(scale);

    for (int n = K * d + 1; n <= n_max; ++n) {
        if (n % d == 0) continue;
        if (std::abs(s.at(n)) > thr) {
            report.verdict = false;
            report.witness_index = n;
            return report;
        }
    }
    report.verdict = true;
    return report;
}

CentralSymmetry central_symmetry(const DenseOperator& t, const Tolerance& tol) {
    const int d = 2;
    CentralSymmetry result;
    result.spectral = zd_symmetric_spectrum(spectrum_of(t, tol), d, tol);
    result.trace =
        trace_criterion(power_traces(t, default_trace_window(t.dim(), d)), d, 0, tol);
    if (result.spectral.verdict != result.trace.verdict)
        throw RouteDisagreement(disagreement_text(result.spectral, result.trace),
                                {result.spectral, result.trace});
    result.verdict = result.spectral.verdict;
    return result;
}

EquivalenceReports run_all_routes(const DenseOperator& t, int d, int K,
                                  const Tolerance& tol, int n_max) {
    if (n_max <= 0) n_max = default_trace_window(t.dim(), d);
    n_max = std::max(n_max, (K + 1) * d);

    EquivalenceReports out;

    // Determinant route: the characteristic polynomial is reached at
    // n = dim; coefficients beyond it only add rounding noise.
    const int coeff_window = static_cast<int>(t.dim());
    const DetCoefficients coeffs =
        det_coeffs_from_traces(power_traces(t, coeff_window));
    const DEvenCheck dc = d_even_check(coeffs, d, tol);
    out.determinant.d = d;
    out.determinant.route = Route::determinant;
    out.determinant.verdict = dc.even;
    out.determinant.witness_index = dc.first_violation;
    out.determinant.tol = tol;
    out.determinant.n_max = coeff_window;

    out.spectral = zd_symmetric_spectrum(spectrum_of(t, tol), d, tol);

    out.trace = trace_criterion(power_traces(t, n_max), d, K, tol);
    out.trace.threshold_K = K;
    return out;
}

EquivalenceReports equivalence_harness(const DenseOperator& t, int d,
                                       const Tolerance& tol,
                                       Eigen::Index dim_cap) {
    if (t.dim() > dim_cap)
        throw std::invalid_argument("equivalence_harness: dim " +
                                    std::to_string(t.dim()) + " exceeds cap " +
                                    std::to_string(dim_cap));
    EquivalenceReports reports = run_all_routes(t, d, 0, tol);
    if (!reports.agree()) {
        const SymmetryReport& a = reports.determinant;
        const SymmetryReport& b = reports.spectral;
        const SymmetryReport& c = reports.trace;
        const auto& x = (a.verdict != b.verdict) ? a : b;
        const auto& y = (a.verdict != b.verdict) ? b : c;
        throw RouteDisagreement(disagreement_text(x, y), {a, b, c});
    }
    return reports;
}

CollapseCheck threshold_collapse_check(const DenseOperator& t, int d, int K,
                                       const Tolerance& tol,
                                       Eigen::Index dim_cap) {
    if (K < 1)
        throw std::invalid_argument("threshold_collapse_check: K must be >= 1");
    if (t.dim() > dim_cap)
        throw std::invalid_argument("threshold_collapse_check: dim exceeds cap");

    // Window long enough that vanishing beyond K*d pins the whole
    // nonzero spectrum: K*d + dim*d indices, and never shorter than the
    // default policy.
    const int n_max = std::max(default_trace_window(t.dim(), d),
                               static_cast<int>((K + t.dim() + 1)) * d);
    const TraceSequence s = power_traces(t, n_max);

    CollapseCheck result;
    result.at_K = trace_criterion(s, d, K, tol);
    if (!result.at_K.verdict) {
        result.held = true;  // implication holds vacuously
        result.vacuous = true;
        return result;
    }
    result.at_zero = trace_criterion(s, d, 0, tol);
    result.held = result.at_zero->verdict;
    return result;
}

}  // namespace specsym
