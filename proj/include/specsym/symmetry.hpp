// Z_d-symmetry verdicts by independent routes: invariance of the
// eigenvalue multiset under rotation by a primitive d-th root of unity,
// vanishing of power traces away from multiples of d (with threshold K),
// and d-evenness of the determinant coefficients. The equivalence
// harness runs all routes and refuses to reconcile disagreements
// silently; a disagreement is numerical breakdown worth surfacing.
//
// Zeros in the spectrum are exempt from the orbit obligation: t*0 = 0,
// so they are self-symmetric under every rotation.

#pragma once

#include "specsym/core.hpp"
#include "specsym/fredholm.hpp"
#include "specsym/traces.hpp"

#include <string>

namespace specsym {

enum class Route { spectral, trace_criterion, determinant };

const char* route_name(Route r);

struct SymmetryReport {
    int d = 2;
    bool verdict = false;
    Route route = Route::spectral;
    int threshold_K = 0;
    std::optional<Complex> witness_eigenvalue;  // eigenvalue with an incomplete orbit
    std::optional<int> witness_index;           // trace/coefficient index above threshold
    Tolerance tol;
    int n_max = 0;                       // inspected window (trace/determinant routes)
    bool all_zero_at_tolerance = false;  // every trace in the window below the abs floor
};

// Carries the per-route reports when two routes disagree beyond
// tolerance. The message names the routes and witnesses.
class RouteDisagreement : public std::runtime_error {
public:
    RouteDisagreement(const std::string& msg, std::vector<SymmetryReport> reports)
        : std::runtime_error(msg), reports_(std::move(reports)) {}
    const std::vector<SymmetryReport>& reports() const { return reports_; }

private:
    std::vector<SymmetryReport> reports_;
};

// Default window for trace-based routes: 3 * dim * d, capped at 512.
int default_trace_window(Eigen::Index dim, int d);

// Verdict true iff the nonzero part of the multiset is invariant under
// rotation by e^{2 pi i / d}; invariance under the generator implies
// invariance under the whole group.
SymmetryReport zd_symmetric_spectrum(const SpectrumMultiset& spec, int d,
                                     const Tolerance& tol);

// Verdict true iff |s_n| stays below the effective threshold for every
// n <= n_max with n > K*d and d∤n. The threshold is scaled by
// max_n |s_n| over the whole window, with the absolute floor; a window
// that is entirely below the floor passes with the all-zero annotation.
// Requires n_max >= (K+1)*d so the check is never vacuous.
SymmetryReport trace_criterion(const TraceSequence& s, int d, int K,
                               const Tolerance& tol);

struct CentralSymmetry {
    bool verdict = false;
    SymmetryReport spectral;
    SymmetryReport trace;
};

// d = 2, K = 0 convenience wrapper running both the spectral and the
// trace route and demanding agreement; throws RouteDisagreement with
// both reports otherwise.
CentralSymmetry central_symmetry(const DenseOperator& t, const Tolerance& tol);

struct EquivalenceReports {
    SymmetryReport determinant;
    SymmetryReport spectral;
    SymmetryReport trace;
    bool agree() const {
        return determinant.verdict == spectral.verdict &&
               spectral.verdict == trace.verdict;
    }
    bool verdict() const { return spectral.verdict; }
};

// All three verdicts (determinant d-evenness, spectral orbit
// completeness, trace criterion at K = 0) with three-way agreement
// enforced; any pairwise disagreement throws RouteDisagreement.
EquivalenceReports equivalence_harness(const DenseOperator& t, int d,
                                       const Tolerance& tol,
                                       Eigen::Index dim_cap = 64);

// Like equivalence_harness but without the agreement gate; used where
// the caller wants to inspect a disagreement instead of catching it.
EquivalenceReports run_all_routes(const DenseOperator& t, int d, int K,
                                  const Tolerance& tol, int n_max = 0);

struct CollapseCheck {
    bool held = false;    // criterion at K implied criterion at 0
    bool vacuous = false; // criterion already failed at K
    SymmetryReport at_K;
    std::optional<SymmetryReport> at_zero;
};

// Finite-dimensional collapse of the threshold: if the trace criterion
// passes at threshold K over a window of at least (K + dim)*d, it must
// also pass at K = 0. A failure at K makes the implication vacuous,
// which is flagged rather than counted as a pass.
CollapseCheck threshold_collapse_check(const DenseOperator& t, int d, int K,
                                       const Tolerance& tol,
                                       Eigen::Index dim_cap = 64);

}  // namespace specsym
