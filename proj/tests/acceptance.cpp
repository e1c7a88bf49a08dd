// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Tolerances are pinned here; a failing criterion is a finding, not a knob.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hahnosc/algebra.hpp"
#include "hahnosc/cli.hpp"
#include "hahnosc/limits.hpp"
#include "hahnosc/oscillator.hpp"
#include "hahnosc/parabose.hpp"
#include "hahnosc/specfun.hpp"

using namespace hahnosc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int g_failures = 0;

void criterion(int index, const std::string& name, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  [%2d] %-38s %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", index,
                name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass)
        ++g_failures;
}

std::string num(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.3g", v);
    return b;
}

// ------------------------------------------------------------- shared grids

const long long kTwoJ[] = {1, 3, 9, 65};
const double kAlpha[] = {-0.9, -0.7, -0.5, 0.0, 1.0, 5.0};

bool within(double secs, double limit, std::string& detail) {
    if (secs <= limit)
        return true;
    detail += " [exceeded " + num(limit) + " s runtime bound]";
    return false;
}

// -------------------------------------------------------------- file helpers

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw std::runtime_error("missing expected output " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& content) {
    std::vector<std::string> lines;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::vector<double> csv_fields(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ','))
        out.push_back(std::strtod(cell.c_str(), nullptr));
    return out;
}

int run_cli_args(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("hahnosc");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path fresh_dir(const char* name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// ---------------------------------------------------------------- criteria

Outcome algebra_relations() {
    auto t0 = std::chrono::steady_clock::now();
    double worst_ratio = 0.0;
    for (long long tj : kTwoJ)
        for (double a : kAlpha) {
            RepParams p = RepParams::from_two_j(tj, a);
            worst_ratio = std::max(worst_ratio,
                                   verify_defining_relations(p).max() / (1e-12 * p.dim()));
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = "worst residual at " + num(worst_ratio) + "x the 1e-12*(2j+1) bound";
    bool pass = worst_ratio <= 1.0 && within(secs, 1.0, detail);
    return {pass, detail};
}

Outcome spectrum_closed_form() {
    auto t0 = std::chrono::steady_clock::now();
    double worst_ev = 0.0, worst_gap = 0.0;
    for (long long tj : kTwoJ)
        for (double a : kAlpha) {
            RepParams p = RepParams::from_two_j(tj, a);
            Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(2.0 * build_position(p),
                                                                 Eigen::EigenvaluesOnly);
            if (solver.info() != Eigen::Success)
                throw std::runtime_error("eigensolver failed");
            PositionSpectrum closed = position_spectrum_closed_form(p);
            worst_ev = std::max(worst_ev, (solver.eigenvalues() - 2.0 * closed.eigenvalues)
                                              .cwiseAbs()
                                              .maxCoeff());
            worst_gap = std::max(worst_gap, std::abs(closed.middle_gap() - (2 * a + 2)));
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail =
        "eigenvalue dev " + num(worst_ev) + " (tol 1e-10), gap dev " + num(worst_gap) +
        " (tol 1e-12)";
    bool pass = worst_ev <= 1e-10 && worst_gap <= 1e-12 && within(secs, 1.0, detail);
    return {pass, detail};
}

Outcome eigenvector_orthogonality() {
    auto t0 = std::chrono::steady_clock::now();
    double worst_ortho = 0.0, worst_res = 0.0;
    for (double a : {1.0, -0.7}) {
        RepParams p = RepParams::from_two_j(65, a);
        Eigen::MatrixXd U = eigenvector_matrix(p);
        int d = p.dim();
        worst_ortho = std::max(worst_ortho,
                               (U * U.transpose() - Eigen::MatrixXd::Identity(d, d))
                                   .cwiseAbs()
                                   .maxCoeff());
        Eigen::MatrixXd two_q = 2.0 * build_position(p).real();
        Eigen::VectorXd ev = position_spectrum_closed_form(p).eigenvalues;
        for (int i = 0; i < d; ++i)
            worst_res = std::max(worst_res,
                                 (two_q * U.col(i) - 2.0 * ev(i) * U.col(i)).norm());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = "UU^T dev " + num(worst_ortho) + " (tol 1e-12), column residual " +
                         num(worst_res) + " (tol 1e-10)";
    bool pass = worst_ortho <= 1e-12 && worst_res <= 1e-10 && within(secs, 1.0, detail);
    return {pass, detail};
}

Outcome dual_path_wavefunctions() {
    // Relative agreement 1e-10 per entry; 1e-12 absolute floor shields the
    // comparison where an entry itself is at rounding scale.
    double worst = 0.0;
    for (double a : {-0.7, -0.5, 1.0}) {
        RepParams p = RepParams::from_two_j(65, a);
        Eigen::MatrixXd U = eigenvector_matrix(p);
        for (int level = 0; level < p.dim(); ++level) {
            Eigen::VectorXd direct = wavefunction_row(p, level);
            for (int i = 0; i < p.dim(); ++i) {
                double u = U(level, i), v = direct(i);
                worst = std::max(worst,
                                 std::abs(u - v) /
                                     (1e-10 * std::max(std::abs(u), std::abs(v)) + 1e-12));
            }
        }
    }
    return {worst <= 1.0, "worst entry at " + num(worst) + "x the 1e-10 relative bound"};
}

Outcome krawtchouk_reductions() {
    double worst_id = 0.0;
    for (int n = 0; n <= 6; ++n)
        for (long long tq = 1; tq <= 13; tq += 2) {
            KrawtchoukResiduals r =
                krawtchouk_reduction_check(n, HalfInt::from_twice(tq), HalfInt::from_twice(13));
            worst_id = std::max({worst_id, r.even, r.odd});
        }

    RepParams p = RepParams::from_two_j(65, -0.5);
    WavefunctionTable t = wavefunction_table(p);
    double worst_table = 0.0;
    for (int level = 0; level < p.dim(); ++level)
        for (int i = 0; i < p.dim(); ++i) {
            HalfInt k = HalfInt::from_twice(-65 + 2 * i);
            worst_table = std::max(worst_table, std::abs(t.values(level, i) -
                                                         wavefunction_krawtchouk(p, level, k)));
        }
    std::string detail = "identity dev " + num(worst_id) + ", table dev " + num(worst_table) +
                         " (tol 1e-10)";
    return {worst_id <= 1e-10 && worst_table <= 1e-10, detail};
}

Outcome hahn_orthogonality() {
    const double params[] = {-0.5, -0.3, 0.0, 1.0, 2.5};
    double worst = 0.0;
    for (int N : {1, 5, 20, 60})
        for (double a : params)
            for (double b : params) {
                Eigen::MatrixXd T(N + 1, N + 1);
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x)
                        T(n, x) = hahn_orthonormal(HahnSpec(n, a, b, N), x);
                worst = std::max(worst, (T * T.transpose() -
                                         Eigen::MatrixXd::Identity(N + 1, N + 1))
                                            .cwiseAbs()
                                            .maxCoeff());
            }
    return {worst <= 1e-12, "Gram deviation " + num(worst) + " (tol 1e-12, N up to 60)"};
}

Outcome parabose_interior() {
    double worst_osp = 0.0, worst_h = 0.0;
    for (double a : {0.3, 0.5, 1.0, 2.0}) {
        OspResiduals r = verify_osp12(ParaboseParams{a, 200});
        worst_osp = std::max({worst_osp, r.interior_plus, r.interior_minus});
        worst_h = std::max(worst_h, r.hamiltonian_interior);
    }
    std::string detail = "ladder residual " + num(worst_osp) + ", spectrum dev " +
                         num(worst_h) + " (tol 1e-12)";
    return {worst_osp <= 1e-12 && worst_h <= 1e-12, detail};
}

Outcome psi_orthonormality() {
    double worst_gram = 0.0;
    for (double a : {0.3, 0.5, 2.0}) {
        Eigen::MatrixXd G = psi_gram(a, 6);
        worst_gram = std::max(worst_gram, (G - Eigen::MatrixXd::Identity(7, 7))
                                              .cwiseAbs()
                                              .maxCoeff());
    }

    double worst_hermite = 0.0;
    for (int n = 0; n <= 6; ++n) {
        double lognorm = -0.5 * n * std::log(2.0) - 0.5 * std::lgamma(n + 1.0) -
                         0.25 * std::log(std::acos(-1.0));
        for (int i = 0; i <= 500; ++i) {
            double x = -5.0 + 10.0 * i / 500.0;
            double target = std::exp(lognorm - 0.5 * x * x) * hermite(n, x);
            worst_hermite = std::max(worst_hermite, std::abs(psi(n, 0.5, x) - target));
        }
    }
    std::string detail = "Gram dev " + num(worst_gram) + " (tol 1e-8), Hermite dev " +
                         num(worst_hermite) + " (tol 1e-12)";
    return {worst_gram <= 1e-8 && worst_hermite <= 1e-12, detail};
}

Outcome parabose_limit() {
    auto t0 = std::chrono::steady_clock::now();
    fs::path fixture = HAHNOSC_DATA_FIXTURE;
    if (!fs::exists(fixture))
        return {false, "calibrated threshold fixture missing at " + fixture.string()};
    ThresholdTable table = ThresholdTable::load(fixture);

    const std::vector<long long> seq = {21, 61, 201, 401};
    bool monotone = true, bounded = true;
    double worst_final = 0.0;
    std::string missing;
    for (int level : {0, 1, 2, 3})
        for (double alpha : {-0.7, -0.5, 1.0}) {
            LimitScan scan = parabose_limit_scan(level, alpha, default_limit_grid(), seq);
            double prev = -1.0, final_err = 0.0;
            for (const LimitScanPoint& pt : scan.points) {
                if (pt.skipped)
                    continue;
                if (prev >= 0.0 && pt.max_error > 1.05 * prev)
                    monotone = false;
                prev = pt.max_error;
                final_err = pt.max_error;
            }
            worst_final = std::max(worst_final, final_err);
            auto bound = table.lookup(level, alpha, seq.back());
            if (!bound)
                missing = "no frozen threshold for n=" + std::to_string(level);
            else if (final_err > *bound)
                bounded = false;
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = "non-increasing=" + std::string(monotone ? "yes" : "NO") +
                         ", worst final error " + num(worst_final);
    if (!missing.empty())
        detail += " [" + missing + "]";
    bool pass = monotone && bounded && missing.empty() && within(secs, 30.0, detail);
    if (!bounded)
        detail += " [exceeds frozen threshold]";
    return {pass, detail};
}

Outcome figure_reproduction() {
    fs::path d1 = fresh_dir("hahnosc_accept_run1");
    fs::path d2 = fresh_dir("hahnosc_accept_run2");
    for (const fs::path& d : {d1, d2}) {
        if (run_cli_args({"figure1", "-o", d.string()}) != 0)
            return {false, "figure1 command failed"};
        if (run_cli_args({"figure2", "-o", d.string()}) != 0)
            return {false, "figure2 command failed"};
    }

    // 12 discrete files x 66 rows, unit norms, exact parity.
    int fig1_files = 0;
    double worst_norm = 0.0;
    bool parity_ok = true;
    for (const char* a : {"-0.5", "-0.7", "1"})
        for (const char* n : {"0", "1", "2", "65"}) {
            std::vector<std::string> lines =
                lines_of(slurp(d1 / ("fig1_alpha" + std::string(a) + "_n" + n + ".csv")));
            if (lines.size() != 67)
                return {false, "fig1 file does not have 66 data rows"};
            ++fig1_files;
            std::map<long long, double> phi;
            double norm = 0.0;
            for (std::size_t i = 1; i < lines.size(); ++i) {
                std::vector<double> f = csv_fields(lines[i]);
                phi[static_cast<long long>(f[0])] = f[2];
                norm += f[2] * f[2];
            }
            worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
            bool even = (std::stoi(n) % 2 == 0);
            for (const auto& [k, v] : phi)
                if (phi.at(-k) != (even ? v : -v))
                    parity_ok = false;
        }

    // 9 continuous files; the a = 1/2 family matches the Hermite form.
    int fig2_files = 0;
    double worst_hermite = 0.0;
    for (const char* a : {"0.5", "0.3", "2"})
        for (const char* n : {"0", "1", "2"}) {
            std::vector<std::string> lines =
                lines_of(slurp(d1 / ("fig2_a" + std::string(a) + "_n" + n + ".csv")));
            if (lines.size() != 502)
                return {false, "fig2 file does not have 501 data rows"};
            ++fig2_files;
            if (std::string(a) == "0.5") {
                int level = std::stoi(n);
                double lognorm = -0.5 * level * std::log(2.0) -
                                 0.5 * std::lgamma(level + 1.0) -
                                 0.25 * std::log(std::acos(-1.0));
                for (std::size_t i = 1; i < lines.size(); ++i) {
                    std::vector<double> f = csv_fields(lines[i]);
                    double target = std::exp(lognorm - 0.5 * f[0] * f[0]) * hermite(level, f[0]);
                    worst_hermite = std::max(worst_hermite, std::abs(f[1] - target));
                }
            }
        }

    bool identical = true;
    for (const auto& entry : fs::directory_iterator(d1))
        if (slurp(entry.path()) != slurp(d2 / entry.path().filename()))
            identical = false;

    std::string detail = std::to_string(fig1_files) + "+" + std::to_string(fig2_files) +
                         " files, norm dev " + num(worst_norm) + ", Hermite dev " +
                         num(worst_hermite) + ", byte-identical=" +
                         (identical ? "yes" : "NO");
    bool pass = fig1_files == 12 && fig2_files == 9 && worst_norm <= 1e-12 && parity_ok &&
                worst_hermite <= 1e-12 && identical;
    if (!parity_ok)
        detail += " [parity violated]";
    return {pass, detail};
}

} // namespace

int main() {
    criterion(1, "algebra defining relations", algebra_relations);
    criterion(2, "position spectrum closed form", spectrum_closed_form);
    criterion(3, "eigenvector matrix", eigenvector_orthogonality);
    criterion(4, "dual-path wavefunctions", dual_path_wavefunctions);
    criterion(5, "krawtchouk reductions", krawtchouk_reductions);
    criterion(6, "hahn orthonormality", hahn_orthogonality);
    criterion(7, "parabose interior relations", parabose_interior);
    criterion(8, "parabose wavefunction orthonormality", psi_orthonormality);
    criterion(9, "parabose limit convergence", parabose_limit);
    criterion(10, "figure reproduction", figure_reproduction);

    if (g_failures)
        std::printf("\n%d of 10 acceptance criteria FAILED\n", g_failures);
    else
        std::printf("\nall 10 acceptance criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
