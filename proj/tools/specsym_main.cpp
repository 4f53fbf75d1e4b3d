// specsym: spectral symmetry and determinant analysis of operator
// documents from the command line.
//
// Exit codes: 0 symmetric / success, 1 asymmetric, 2 usage, parse or
// I/O failure, 3 internal route disagreement.

#include "specsym/constructions.hpp"
#include "specsym/core.hpp"
#include "specsym/document.hpp"
#include "specsym/fredholm.hpp"
#include "specsym/symmetry.hpp"
#include "specsym/traces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace specsym;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSymmetric = 0;
constexpr int kExitAsymmetric = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

// All emitted numbers carry 17 significant digits so downstream diffing
// is exact.
std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct CommonOpts {
    std::string input;
    std::string out;
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int n_max = 0;  // 0 = choose from the operator dimension

    Tolerance tol() const { return Tolerance{rel_tol, abs_tol}; }
};

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + out + "'");
    f << text;
}

OperatorDocument read_input(const std::string& input) {
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_document(buf.str());
    }
    return load_document(input);
}

int run_traces(const CommonOpts& opts) {
    const OperatorDocument doc = read_input(opts.input);
    const DenseOperator op = doc.to_operator();
    const int n_max =
        opts.n_max > 0 ? opts.n_max
                       : std::min<int>(3 * static_cast<int>(op.dim()), 512);
    const TraceSequence s = power_traces(op, n_max);

    std::ostringstream os;
    os << "n,re,im\n";
    for (int n = 1; n <= s.n_max(); ++n)
        os << n << ',' << fmt17(s.at(n).real()) << ',' << fmt17(s.at(n).imag()) << '\n';
    if (doc.kind == DocumentKind::representation) {
        const Complex nt = nuclear_trace(*doc.representation);
        os << "nuclear_trace," << fmt17(nt.real()) << ',' << fmt17(nt.imag()) << '\n';
    }
    write_output(opts.out, os.str());
    return kExitSymmetric;
}

int run_spectrum(const CommonOpts& opts) {
    const OperatorDocument doc = read_input(opts.input);
    const SpectrumMultiset spec = spectrum_of(doc.to_operator(), opts.tol());
    std::ostringstream os;
    os << "re,im,multiplicity\n";
    for (const auto& e : spec.entries())
        os << fmt17(e.value.real()) << ',' << fmt17(e.value.imag()) << ','
           << e.multiplicity << '\n';
    write_output(opts.out, os.str());
    return kExitSymmetric;
}

int run_det(const CommonOpts& opts, const std::string& emit) {
    const OperatorDocument doc = read_input(opts.input);
    const DenseOperator op = doc.to_operator();
    const int n_max = opts.n_max > 0 ? opts.n_max : static_cast<int>(op.dim());
    const DetCoefficients coeffs = det_coeffs_from_traces(power_traces(op, n_max));

    std::ostringstream os;
    if (emit == "coeffs") {
        os << "n,re,im\n";
        for (int n = 0; n <= coeffs.max_index(); ++n)
            os << n << ',' << fmt17(coeffs.at(n).real()) << ','
               << fmt17(coeffs.at(n).imag()) << '\n';
    } else {  // zeros
        const SpectrumMultiset zeros = det_zeros(coeffs, opts.tol());
        os << "re,im,multiplicity,inv_re,inv_im\n";
        for (const auto& e : zeros.entries()) {
            const Complex inv = Complex(1.0) / e.value;
            os << fmt17(e.value.real()) << ',' << fmt17(e.value.imag()) << ','
               << e.multiplicity << ',' << fmt17(inv.real()) << ','
               << fmt17(inv.imag()) << '\n';
        }
    }
    write_output(opts.out, os.str());
    return kExitSymmetric;
}

ordered_json report_to_json(const SymmetryReport& r) {
    ordered_json j;
    j["verdict"] = r.verdict;
    if (r.witness_eigenvalue)
        j["witness_eigenvalue"] =
            ordered_json::array({r.witness_eigenvalue->real(), r.witness_eigenvalue->imag()});
    else
        j["witness_eigenvalue"] = nullptr;
    if (r.witness_index)
        j["witness_index"] = *r.witness_index;
    else
        j["witness_index"] = nullptr;
    if (r.route == Route::trace_criterion) {
        j["threshold_K"] = r.threshold_K;
        j["all_zero_at_tolerance"] = r.all_zero_at_tolerance;
    }
    if (r.route != Route::spectral) j["n_max"] = r.n_max;
    return j;
}

int run_check(const CommonOpts& opts, int d, int K) {
    const OperatorDocument doc = read_input(opts.input);
    const DenseOperator op = doc.to_operator();
    const EquivalenceReports reports =
        run_all_routes(op, d, K, opts.tol(), opts.n_max);

    const bool agree = reports.agree();
    const int code = !agree ? kExitDisagreement
                     : reports.verdict() ? kExitSymmetric
                                         : kExitAsymmetric;

    ordered_json j;
    j["command"] = "check";
    if (doc.name) j["name"] = *doc.name;
    j["d"] = d;
    j["K"] = K;
    j["dim"] = op.dim();
    j["n_max"] = reports.trace.n_max;
    j["tolerance"] = ordered_json{{"rel", opts.rel_tol}, {"abs", opts.abs_tol}};
    j["routes"] = ordered_json{{"determinant", report_to_json(reports.determinant)},
                               {"spectral", report_to_json(reports.spectral)},
                               {"trace-criterion", report_to_json(reports.trace)}};
    j["agreement"] = agree;
    j["verdict"] = !agree ? "disagreement"
                 : reports.verdict() ? "symmetric"
                                     : "asymmetric";
    j["exit_code"] = code;
    write_output(opts.out, j.dump(2) + "\n");
    return code;
}

// ── gallery families ─────────────────────────────────────────────────

DenseOperator random_base(Eigen::Index dim, std::uint64_t seed, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            m(i, j) = Complex(unit(rng), unit(rng));
    DenseOperator raw{std::move(m)};
    const double rho = spectrum_of(raw, Tolerance{}).scale();
    const double scale = radius / std::max(rho, 1e-6);
    return DenseOperator(raw.mat() * scale);
}

int run_gallery(const std::string& selector, const std::string& out_dir,
                std::uint64_t seed, const Tolerance& tol) {
    namespace fs = std::filesystem;
    const std::vector<std::string> known = {"kron-d2", "kron-d3", "kron-d4",
                                            "kron-d5", "broken", "defect"};
    if (std::find(known.begin(), known.end(), selector) == known.end()) {
        std::cerr << "unknown family '" << selector << "'; available:";
        for (const auto& k : known) std::cerr << ' ' << k;
        std::cerr << '\n';
        return kExitUsage;
    }
    fs::create_directories(out_dir);

    ordered_json manifest;
    manifest["family"] = selector;
    manifest["seed"] = seed;
    manifest["tolerance"] = ordered_json{{"rel", tol.rel}, {"abs", tol.abs}};

    const int case_count = 10;
    if (selector == "defect") {
        const std::vector<int> n_grid = {4, 16, 64, 256};
        const std::vector<double> s_grid = {0.5, 2.0 / 3.0, 0.75, 1.0};
        const auto table = quasinorm_sweep(s_grid, n_grid);
        std::ostringstream os;
        os << "n,nuclear_trace_re,nuclear_trace_im,op_norm,spectral_radius,eigen_l1_mass";
        for (double s : s_grid) os << ",quasinorm_s=" << fmt17(s);
        os << '\n';
        for (const auto& p : table) {
            os << p.n << ',' << fmt17(p.nuclear_trace.real()) << ','
               << fmt17(p.nuclear_trace.imag()) << ',' << fmt17(p.op_norm) << ','
               << fmt17(p.spectral_radius) << ',' << fmt17(p.eigen_l1_mass);
            for (const auto& q : p.s_quasinorms) os << ',' << fmt17(q.value);
            os << '\n';
        }
        const std::string csv_path = (fs::path(out_dir) / "defect.csv").string();
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
        csv << os.str();
        manifest["files"] = ordered_json::array({"defect.csv"});
    } else {
        ordered_json cases = ordered_json::array();
        for (int i = 0; i < case_count; ++i) {
            int d;
            bool symmetric;
            DenseOperator op = DenseOperator::identity(1);
            char name[64];
            if (selector == "broken") {
                d = 2 + (i % 3);
                symmetric = false;
                const DenseOperator base =
                    random_base(2 + (i % 2), seed + 100 * i, 0.9);
                op = perturb_break_symmetry(kronecker_symmetrize(base, d), 0.05,
                                            seed + 100 * i + 7);
            } else {
                d = selector[6] - '0';
                symmetric = true;
                const DenseOperator base =
                    random_base(2 + (i % 2), seed + 100 * i, 0.9);
                op = kronecker_symmetrize(base, d);
            }
            std::snprintf(name, sizeof name, "%s-%03d", selector.c_str(), i);
            ExpectedVerdict ev{d, 0, symmetric};
            const OperatorDocument doc = document_from_matrix(op, name, ev);
            const std::string file = std::string(name) + ".json";
            save_document(doc, (fs::path(out_dir) / file).string());
            cases.push_back(ordered_json{{"file", file},
                                         {"d", d},
                                         {"K", 0},
                                         {"expected_verdict",
                                          symmetric ? "symmetric" : "asymmetric"},
                                         {"expected_exit",
                                          symmetric ? kExitSymmetric : kExitAsymmetric}});
        }
        manifest["cases"] = std::move(cases);
    }

    const std::string manifest_path = (fs::path(out_dir) / "manifest.json").string();
    std::ofstream mf(manifest_path, std::ios::binary);
    if (!mf) throw std::runtime_error("cannot write '" + manifest_path + "'");
    mf << manifest.dump(2) << '\n';
    return kExitSymmetric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral symmetry and Fredholm determinant analysis"};
    app.require_subcommand(1);

    CommonOpts opts;
    int d = 2;
    int K = 0;
    std::string emit = "coeffs";
    std::string selector;
    std::uint64_t seed = 20250801;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("input", opts.input, "operator document (JSON), '-' for stdin")
                ->required();
        cmd->add_option("--out", opts.out, "output path (default stdout)");
        cmd->add_option("--rel-tol", opts.rel_tol, "relative tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--abs-tol", opts.abs_tol, "absolute tolerance floor")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* traces_cmd = app.add_subcommand("traces", "power traces trace T^n");
    add_common(traces_cmd, true);
    traces_cmd->add_option("--n-max", opts.n_max, "number of traces (default 3*dim)");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalue multiset of the operator");
    add_common(spectrum_cmd, true);

    CLI::App* det_cmd =
        app.add_subcommand("det", "determinant coefficients or zeros");
    add_common(det_cmd, true);
    det_cmd->add_option("--n-max", opts.n_max, "coefficient window (default dim)");
    det_cmd->add_option("--emit", emit, "what to emit")
        ->check(CLI::IsMember({"coeffs", "zeros"}));

    CLI::App* check_cmd =
        app.add_subcommand("check", "Z_d-symmetry verdict by all routes");
    add_common(check_cmd, true);
    check_cmd->add_option("--d", d, "order of the root-of-unity group")
        ->check(CLI::Range(2, 1 << 20));
    check_cmd->add_option("--K", K, "trace-criterion threshold")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--n-max", opts.n_max, "trace window (default 3*dim*d, max 512)");

    CLI::App* gallery_cmd =
        app.add_subcommand("gallery", "generate a case family with expected verdicts");
    gallery_cmd->add_option("family", selector, "kron-d2..kron-d5, broken, defect")
        ->required();
    gallery_cmd->add_option("--out", opts.out, "output directory")->required();
    gallery_cmd->add_option("--seed", seed, "base seed for case generation");
    gallery_cmd->add_option("--rel-tol", opts.rel_tol, "relative tolerance")
        ->check(CLI::PositiveNumber);
    gallery_cmd->add_option("--abs-tol", opts.abs_tol, "absolute tolerance floor")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (traces_cmd->parsed()) return run_traces(opts);
        if (spectrum_cmd->parsed()) return run_spectrum(opts);
        if (det_cmd->parsed()) return run_det(opts, emit);
        if (check_cmd->parsed()) return run_check(opts, d, K);
        if (gallery_cmd->parsed())
            return run_gallery(selector, opts.out, seed, opts.tol());
    } catch (const DocumentParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RouteDisagreement& e) {
        std::cerr << "route disagreement: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
