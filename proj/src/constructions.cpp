#include "specsym/constructions.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <random>

namespace specsym {

DenseOperator kronecker_symmetrize(const DenseOperator& a, int d) {
    if (d < 2)
        throw std::invalid_argument("kronecker_symmetrize: d must be >= 2");
    const Eigen::Index n = a.dim();
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 0; j < d; ++j) shift((j + 1) % d, j) = 1.0;

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n * d, n * d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out.block(i * d, j * d, d, d) = a(i, j) * shift;
    return DenseOperator(std::move(out));
}

DenseOperator from_spectrum(const SpectrumMultiset& spec) {
    std::vector<Complex> roots;
    for (const auto& e : spec.entries())
        roots.insert(roots.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    if (roots.empty())
        throw std::invalid_argument("from_spectrum: empty multiset");

    // Monic coefficients of prod (z - lambda), ascending degree.
    std::vector<Complex> coeff{1.0};
    for (Complex root : roots) {
        std::vector<Complex> next(coeff.size() + 1, Complex(0.0));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] += coeff[k];
            next[k] -= root * coeff[k];
        }
        coeff = std::move(next);
    }

    const Eigen::Index n = static_cast<Eigen::Index>(roots.size());
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) comp(i + 1, i) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i)
        comp(i, n - 1) = -coeff[static_cast<std::size_t>(i)];
    return DenseOperator(std::move(comp));
}

DenseOperator perturb_break_symmetry(const DenseOperator& t, double eps,
                                     std::uint64_t seed) {
    if (eps < 0.0)
        throw std::invalid_argument("perturb_break_symmetry: eps must be >= 0");
    if (eps == 0.0) return t;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::MatrixXcd noise(t.dim(), t.dim());
    for (Eigen::Index i = 0; i < t.dim(); ++i)
        for (Eigen::Index j = 0; j < t.dim(); ++j)
            noise(i, j) = Complex(unit(rng), unit(rng));
    return DenseOperator(t.mat() + eps * noise);
}

DefectFamilySample trace_one_shrinking_family(int n, const std::vector<double>& s_grid) {
    if (n < 1)
        throw std::invalid_argument("trace_one_shrinking_family: N must be >= 1");
    const Eigen::Index dim = n + 2;
    const double inv_n = 1.0 / n;

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < n; ++k) m(k, k) = inv_n;
    m(n, n + 1) = inv_n;  // nilpotent appendix, traceless in every power
    DenseOperator op(std::move(m));

    std::vector<NuclearTerm> diag_terms;
    diag_terms.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
        e[k] = 1.0;
        diag_terms.push_back({Complex(inv_n), e, e});
    }
    NuclearRepresentation diagonal_rep(2.0, dim, diag_terms);

    std::vector<NuclearTerm> all_terms = diag_terms;
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(dim);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    f[n + 1] = 1.0;  // pairs to zero against v, so the trace is untouched
    v[n] = 1.0;
    all_terms.push_back({Complex(inv_n), f, v});
    NuclearRepresentation rep(2.0, dim, std::move(all_terms));

    DefectFamilyPoint point;
    point.n = n;
    point.nuclear_trace = nuclear_trace(rep);
    point.op_norm = op.mat().jacobiSvd().singularValues()[0];

    const SpectrumMultiset spec = spectrum_of(op, Tolerance{});
    point.spectral_radius = spec.scale();
    point.eigen_l1_mass = 0.0;
    for (const auto& e : spec.entries())
        point.eigen_l1_mass += e.multiplicity * std::abs(e.value);

    for (double s : s_grid)
        point.s_quasinorms.push_back({s, s_quasinorm(diagonal_rep, s)});

    return {std::move(op), std::move(rep), std::move(diagonal_rep), std::move(point)};
}

std::vector<DefectFamilyPoint> quasinorm_sweep(const FamilyGenerator& family,
                                               const std::vector<double>& s_grid,
                                               const std::vector<int>& n_grid) {
    if (s_grid.empty() || n_grid.empty())
        throw std::invalid_argument("quasinorm_sweep: empty grid");
    for (double s : s_grid)
        if (!(s > 0.0) || s > 1.0)
            throw std::invalid_argument("quasinorm_sweep: s must lie in (0, 1]");

    std::vector<DefectFamilyPoint> table;
    table.reserve(n_grid.size());
    for (int n : n_grid) {
        DefectFamilySample sample = family(n);
        DefectFamilyPoint point = sample.point;
        point.s_quasinorms.clear();
        for (double s : s_grid)
            point.s_quasinorms.push_back({s, s_quasinorm(sample.diagonal_rep, s)});
        table.push_back(std::move(point));
    }
    return table;
}

}  // namespace specsym
