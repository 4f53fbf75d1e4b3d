// Generators for test operators: spectra that are Z_d-symmetric by
// construction (Kronecker product with a cyclic shift), companion
// matrices from prescribed spectra, seeded symmetry-breaking
// perturbations, and the trace-one shrinking families whose every norm
// decays while the eigenvalue l1 mass stays pinned at one.

#pragma once

#include "specsym/core.hpp"
#include "specsym/traces.hpp"

#include <cstdint>
#include <functional>

namespace specsym {

// A (x) C_d with C_d the d x d cyclic shift. The spectrum is the full
// root-of-unity orbit {lambda * omega^j} of every eigenvalue of A, with
// multiplicities inherited, so the result is Z_d-symmetric by
// construction.
DenseOperator kronecker_symmetrize(const DenseOperator& a, int d);

// Companion matrix of prod (z - lambda_i); its spectrum reproduces the
// prescribed multiset. Coefficients by incremental root multiplication.
DenseOperator from_spectrum(const SpectrumMultiset& spec);

// T + eps * R with seeded unit-scale random R. With eps > 0 this
// destroys every exact root-of-unity orbit with probability one;
// eps = 0 returns T unchanged.
DenseOperator perturb_break_symmetry(const DenseOperator& t, double eps,
                                     std::uint64_t seed);

struct QuasinormSample {
    double s = 1.0;
    double value = 0.0;
};

// Measured profile of one member of a trace-one family.
struct DefectFamilyPoint {
    int n = 1;                     // truncation size N
    Complex nuclear_trace;         // stays exactly 1 along the family
    double op_norm = 0.0;          // largest singular value
    double spectral_radius = 0.0;
    std::vector<QuasinormSample> s_quasinorms;  // of the trace-carrying diagonal part
    double eigen_l1_mass = 0.0;    // sum of |eigenvalue| * multiplicity, pinned at 1
};

struct DefectFamilySample {
    DenseOperator op;                    // (1/N) I_N ⊕ (1/N) J_2, dim N + 2
    NuclearRepresentation rep;           // full representation, induces op exactly
    NuclearRepresentation diagonal_rep;  // the N trace-carrying diagonal terms
    DefectFamilyPoint point;
};

// Member N of the trace-one shrinking family: a 1/N multiple of the
// identity on N coordinates plus a 1/N-scaled 2 x 2 nilpotent block.
// Nuclear trace is exactly 1 for every N while operator norm, spectral
// radius and trace of the square all decay like 1/N. The eigenvalue l1
// mass cannot follow: it stays at 1 because the trace equals the
// eigenvalue sum in finite dimension.
DefectFamilySample trace_one_shrinking_family(int n,
                                              const std::vector<double>& s_grid = {
                                                  0.5, 2.0 / 3.0, 0.75, 1.0});

using FamilyGenerator = std::function<DefectFamilySample(int)>;

// One DefectFamilyPoint per N with quasinorms evaluated on the given s
// grid. Columns grow like N^{1/s - 1}: bounded at s = 1, steeper as s
// decreases.
std::vector<DefectFamilyPoint> quasinorm_sweep(const FamilyGenerator& family,
                                               const std::vector<double>& s_grid,
                                               const std::vector<int>& n_grid);

inline std::vector<DefectFamilyPoint> quasinorm_sweep(
    const std::vector<double>& s_grid, const std::vector<int>& n_grid) {
    return quasinorm_sweep([](int n) { return trace_one_shrinking_family(n); },
                           s_grid, n_grid);
}

}  // namespace specsym
