#include "specsym/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace specsym {

namespace {

void require_finite(const Eigen::MatrixXcd& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!is_finite(m(i, j)))
                throw std::invalid_argument("DenseOperator: non-finite entry");
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Exact min-cost assignment on a square cost matrix (potentials /
// shortest augmenting path, O(n^3)). Returns column assigned to each row.
std::vector<int> hungarian(const Eigen::MatrixXd& cost) {
    const int n = static_cast<int>(cost.rows());
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, std::numeric_limits<double>::infinity());
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = 0;
            double delta = std::numeric_limits<double>::infinity();
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

std::vector<Complex> expand(const SpectrumMultiset& s) {
    std::vector<Complex> out;
    for (const auto& e : s.entries())
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    return out;
}

}  // namespace

DenseOperator::DenseOperator(Eigen::MatrixXcd entries) : mat_(std::move(entries)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw std::invalid_argument("DenseOperator: matrix must be square, dim >= 1");
    require_finite(mat_);
}

DenseOperator DenseOperator::identity(Eigen::Index dim) {
    return DenseOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

DenseOperator DenseOperator::zero(Eigen::Index dim) {
    return DenseOperator(Eigen::MatrixXcd::Zero(dim, dim));
}

double lp_norm(const Eigen::VectorXcd& v, double p) {
    if (v.size() == 0)
        throw std::invalid_argument("lp_norm: empty vector");
    if (!(p >= 1.0))  // rejects NaN as well
        throw std::invalid_argument("lp_norm: exponent must satisfy p >= 1");
    const double m = v.cwiseAbs().maxCoeff();
    if (m == 0.0) return 0.0;
    if (std::isinf(p)) return m;
    if (p == 1.0) return v.cwiseAbs().sum();
    // scale by the max modulus so that large p does not overflow
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        acc += std::pow(std::abs(v[i]) / m, p);
    return m * std::pow(acc, 1.0 / p);
}

double conjugate_exponent(double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("conjugate_exponent: p must satisfy p >= 1");
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return kInf;
    return p / (p - 1.0);
}

DenseOperator mat_mul(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    return DenseOperator(a.mat() * b.mat());
}

DenseOperator mat_pow(const DenseOperator& t, int m) {
    if (m < 1)
        throw std::invalid_argument("mat_pow: exponent must be >= 1");
    Eigen::MatrixXcd acc = t.mat();
    for (int k = 1; k < m; ++k) acc = acc * t.mat();
    return DenseOperator(std::move(acc));
}

int SpectrumMultiset::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
}

SpectrumMultiset SpectrumMultiset::canonical(const std::vector<Complex>& values,
                                             const Tolerance& tol) {
    std::vector<EigenvalueEntry> entries;
    entries.reserve(values.size());
    for (Complex v : values) entries.push_back({v, 1});
    return canonical_weighted(std::move(entries), tol);
}

SpectrumMultiset SpectrumMultiset::canonical_weighted(std::vector<EigenvalueEntry> entries,
                                                      const Tolerance& tol) {
    for (const auto& e : entries) {
        if (!is_finite(e.value))
            throw std::invalid_argument("SpectrumMultiset: non-finite eigenvalue");
        if (e.multiplicity < 1)
            throw std::invalid_argument("SpectrumMultiset: multiplicity must be >= 1");
    }
    double scale = 0.0;
    for (const auto& e : entries) scale = std::max(scale, std::abs(e.value));
    const double thr = tol.threshold(scale);

    // Single-linkage merge, repeated until the weighted means are
    // pairwise separated. Usually one pass.
    bool merged = true;
    while (merged && entries.size() > 1) {
        merged = false;
        const std::size_t n = entries.size();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(entries[i].value - entries[j].value) <= thr) {
                    auto ri = find(i), rj = find(j);
                    if (ri != rj) {
                        parent[rj] = ri;
                        merged = true;
                    }
                }
        if (!merged) break;
        std::vector<EigenvalueEntry> next;
        for (std::size_t i = 0; i < n; ++i) {
            if (find(i) != i) continue;
            Complex sum = 0.0;
            int mult = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (find(j) != i) continue;
                sum += entries[j].value * static_cast<double>(entries[j].multiplicity);
                mult += entries[j].multiplicity;
            }
            next.push_back({sum / static_cast<double>(mult), mult});
        }
        entries = std::move(next);
    }

    std::sort(entries.begin(), entries.end(),
              [](const EigenvalueEntry& a, const EigenvalueEntry& b) {
                  return lex_less(a.value, b.value);
              });
    SpectrumMultiset out;
    out.entries_ = std::move(entries);
    out.scale_ = scale;
    return out;
}

SpectrumMultiset remerge(const SpectrumMultiset& s, const Tolerance& coarser) {
    return SpectrumMultiset::canonical_weighted(s.entries(), coarser);
}

SpectrumMultiset nonzero_part(const SpectrumMultiset& s, const Tolerance& tol) {
    const double thr = tol.threshold(s.scale());
    std::vector<EigenvalueEntry> kept;
    for (const auto& e : s.entries())
        if (std::abs(e.value) > thr) kept.push_back(e);
    return SpectrumMultiset::canonical_weighted(std::move(kept), tol);
}

SpectrumMultiset spectrum_of(const DenseOperator& t, const Tolerance& tol) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(t.mat(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("spectrum_of: eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    std::vector<Complex> values(ev.data(), ev.data() + ev.size());
    return SpectrumMultiset::canonical(values, tol);
}

MatchResult multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b,
                           const Tolerance& tol) {
    const double thr = tol.threshold(std::max(a.scale(), b.scale()));

    if (a.total_multiplicity() != b.total_multiplicity()) {
        // Report a value whose multiplicity has no counterpart.
        for (const auto& ea : a.entries()) {
            int mb = 0;
            for (const auto& eb : b.entries())
                if (std::abs(ea.value - eb.value) <= thr) mb += eb.multiplicity;
            if (mb != ea.multiplicity) return {false, ea.value};
        }
        for (const auto& eb : b.entries()) {
            int ma = 0;
            for (const auto& ea : a.entries())
                if (std::abs(ea.value - eb.value) <= thr) ma += ea.multiplicity;
            if (ma != eb.multiplicity) return {false, eb.value};
        }
        return {false, a.empty() ? (b.empty() ? Complex(0.0) : b.entries().front().value)
                                 : a.entries().front().value};
    }

    std::vector<Complex> va = expand(a), vb = expand(b);
    const std::size_t n = va.size();
    if (n == 0) return {true, std::nullopt};
    std::sort(va.begin(), va.end(), lex_less);
    std::sort(vb.begin(), vb.end(), lex_less);

    // Greedy nearest-neighbour pairing.
    std::vector<char> used(n, false);
    std::vector<std::size_t> pair_of(n, 0);
    bool greedy_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            double d = std::abs(va[i] - vb[j]);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        used[best_j] = true;
        pair_of[i] = best_j;
        if (best > thr) greedy_ok = false;
    }
    if (greedy_ok) return {true, std::nullopt};

    // Degenerate spacing: fall back to the exact assignment.
    Eigen::MatrixXd cost(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::abs(va[i] - vb[j]);
    std::vector<int> assign = hungarian(cost);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(va[i] - vb[static_cast<std::size_t>(assign[i])]) > thr)
            return {false, va[i]};
    return {true, std::nullopt};
}

}  // namespace specsym
