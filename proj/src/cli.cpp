#include "hahnosc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hahnosc/algebra.hpp"
#include "hahnosc/limits.hpp"
#include "hahnosc/oscillator.hpp"
#include "hahnosc/parabose.hpp"
#include "hahnosc/specfun.hpp"

namespace hahnosc {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt17(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string fmt_short(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%g", v);
    return b;
}

fs::path resolve_outdir(const std::string& flag_value) {
    fs::path dir;
    if (!flag_value.empty())
        dir = flag_value;
    else if (const char* env = std::getenv("HAHNOSC_OUTPUT_DIR"); env && *env)
        dir = env;
    else
        dir = ".";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
    if (!out.flush())
        throw std::runtime_error("write failed: " + p.string());
}

void require_unit_norm(const Eigen::VectorXd& phi, const std::string& what) {
    double s = phi.squaredNorm();
    if (std::abs(s - 1.0) > 1e-12)
        throw std::runtime_error(what + ": discrete norm " + fmt17(s) +
                                 " deviates from 1 beyond 1e-12");
}

// ---------------------------------------------------------------- reporting

class Report {
public:
    void residual(const std::string& name, double value, double bound) {
        rows_.push_back({name, fmt_short(value) + "  (tol " + fmt_short(bound) + ")",
                         value <= bound});
    }
    void flag(const std::string& name, bool ok, const std::string& detail) {
        rows_.push_back({name, detail, ok});
    }

    // Prints one PASS/FAIL line per check; returns the number of failures.
    int print(std::ostream& os) const {
        std::size_t width = 0;
        for (const Row& r : rows_)
            width = std::max(width, r.name.size());
        int fails = 0;
        const Row* first_fail = nullptr;
        for (const Row& r : rows_) {
            os << (r.pass ? "PASS  " : "FAIL  ") << r.name
               << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
            if (!r.pass) {
                ++fails;
                if (!first_fail)
                    first_fail = &r;
            }
        }
        if (fails)
            os << "\nFAILED: " << first_fail->name << " (" << fails << " of "
               << rows_.size() << " checks)\n";
        else
            os << "\nall " << rows_.size() << " checks passed\n";
        return fails;
    }

private:
    struct Row {
        std::string name;
        std::string detail;
        bool pass;
    };
    std::vector<Row> rows_;
};

std::string rep_tag(const RepParams& rep) {
    return "j=" + std::to_string(rep.j.twice()) + "/2 alpha=" + fmt_short(rep.alpha);
}

// ------------------------------------------------------------ check helpers

// Max over all entries of |U - direct| / (rel_tol max(|U|,|direct|) + floor);
// <= 1 means every entry is within tolerance.
double dual_path_ratio(const RepParams& rep, double rel_tol, double abs_floor) {
    Eigen::MatrixXd U = eigenvector_matrix(rep);
    double worst = 0.0;
    for (int level = 0; level < rep.dim(); ++level) {
        Eigen::VectorXd direct = wavefunction_row(rep, level);
        for (int i = 0; i < rep.dim(); ++i) {
            double u = U(level, i), v = direct(i);
            worst = std::max(worst, std::abs(u - v) /
                                        (rel_tol * std::max(std::abs(u), std::abs(v)) +
                                         abs_floor));
        }
    }
    return worst;
}

double hahn_gram_max_dev(double alpha, double beta, int N) {
    Eigen::MatrixXd T(N + 1, N + 1);
    for (int n = 0; n <= N; ++n)
        for (int x = 0; x <= N; ++x)
            T(n, x) = hahn_orthonormal(HahnSpec(n, alpha, beta, N), x);
    Eigen::MatrixXd G = T * T.transpose();
    return (G - Eigen::MatrixXd::Identity(N + 1, N + 1)).cwiseAbs().maxCoeff();
}

double krawtchouk_table_max_err(const RepParams& rep) {
    WavefunctionTable table = wavefunction_table(rep);
    double worst = 0.0;
    for (int level = 0; level < rep.dim(); ++level)
        for (int i = 0; i < rep.dim(); ++i) {
            HalfInt k = -rep.j + HalfInt::whole(i);
            worst = std::max(worst, std::abs(table.values(level, i) -
                                             wavefunction_krawtchouk(rep, level, k)));
        }
    return worst;
}

// Psi^(1/2)_n against the Hermite form (2^(n/2) sqrt(n!) pi^(1/4))^-1 H_n e^(-x^2/2).
double psi_hermite_max_dev(int nmax) {
    double worst = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        double lognorm = -0.5 * n * std::numbers::ln2 - 0.5 * std::lgamma(n + 1.0) -
                         0.25 * std::log(std::numbers::pi);
        for (int i = 0; i <= 500; ++i) {
            double x = -5.0 + 10.0 * i / 500.0;
            double target = std::exp(lognorm - 0.5 * x * x) * hermite(n, x);
            worst = std::max(worst, std::abs(psi(n, 0.5, x) - target));
        }
    }
    return worst;
}

struct ScanOutcome {
    LimitScan scan;
    bool monotone = true;   // 5% per-step slack
    double final_error = 0; // at the largest non-skipped j
    bool any = false;
};

ScanOutcome run_scan(int level, double alpha, const std::vector<long long>& two_j_seq) {
    ScanOutcome out{parabose_limit_scan(level, alpha, default_limit_grid(), two_j_seq)};
    const LimitScanPoint* prev = nullptr;
    for (const LimitScanPoint& p : out.scan.points) {
        if (p.skipped)
            continue;
        if (prev && p.max_error > 1.05 * prev->max_error)
            out.monotone = false;
        prev = &p;
        out.final_error = p.max_error;
        out.any = true;
    }
    return out;
}

bool nonincreasing(const std::vector<double>& v, double slack = 1.05) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > slack * v[i - 1])
            return false;
    return true;
}

double round_up_2sig(double v) {
    if (!(v > 0.0))
        return v;
    double scale = std::pow(10.0, std::floor(std::log10(v)) - 1.0);
    return std::ceil(v / scale) * scale;
}

// ------------------------------------------------------------------ verify

void verify_algebra(Report& rep, const std::vector<long long>& two_j_list,
                    const std::vector<double>& alpha_list) {
    for (long long tj : two_j_list)
        for (double a : alpha_list) {
            RepParams p = RepParams::from_two_j(tj, a);
            rep.residual("algebra relations      " + rep_tag(p),
                         verify_defining_relations(p).max(), 1e-12 * p.dim());
            rep.flag("algebra irreducible    " + rep_tag(p), verify_irreducibility(p),
                     "ladder chain unbroken");
        }
}

void verify_oscillator(Report& rep, const std::vector<long long>& two_j_list,
                       const std::vector<double>& alpha_list) {
    for (long long tj : two_j_list)
        for (double a : alpha_list) {
            RepParams p = RepParams::from_two_j(tj, a);
            std::string tag = rep_tag(p);

            PositionSpectrum closed = position_spectrum_closed_form(p);
            Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(2.0 * build_position(p),
                                                                 Eigen::EigenvaluesOnly);
            if (solver.info() != Eigen::Success)
                throw std::runtime_error("verify: eigensolver failed at " + tag);
            rep.residual("spectrum closed vs 2q  " + tag,
                         (solver.eigenvalues() - 2.0 * closed.eigenvalues)
                             .cwiseAbs()
                             .maxCoeff(),
                         1e-10);
            rep.residual("spectrum middle gap    " + tag,
                         std::abs(closed.middle_gap() - (2.0 * a + 2.0)), 1e-12);

            OperatorMatrix H = build_hamiltonian(p), q = build_position(p),
                           pm = build_momentum(p);
            constexpr std::complex<double> I{0.0, 1.0};
            double heis = std::max((H * q - q * H + I * pm).norm(),
                                   (H * pm - pm * H - I * q).norm());
            rep.residual("heisenberg residuals   " + tag, heis, 1e-12 * p.dim());

            rep.residual("momentum = position sp " + tag,
                         (momentum_spectrum_numeric(p) - closed.eigenvalues)
                             .cwiseAbs()
                             .maxCoeff(),
                         1e-10);
        }
}

void verify_eigenvectors(Report& rep, const std::vector<RepParams>& pairs) {
    for (const RepParams& p : pairs) {
        std::string tag = rep_tag(p);
        Eigen::MatrixXd U = eigenvector_matrix(p);
        int d = p.dim();
        Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
        double ortho = std::max((U * U.transpose() - eye).cwiseAbs().maxCoeff(),
                                (U.transpose() * U - eye).cwiseAbs().maxCoeff());
        rep.residual("eigenvectors UU^T = I  " + tag, ortho, 1e-12);

        Eigen::MatrixXd two_q = 2.0 * build_position(p).real();
        Eigen::VectorXd q_closed = position_spectrum_closed_form(p).eigenvalues;
        double worst = 0.0;
        for (int i = 0; i < d; ++i)
            worst = std::max(worst,
                             (two_q * U.col(i) - 2.0 * q_closed(i) * U.col(i)).norm());
        rep.residual("eigen-residual 2q u    " + tag, worst, 1e-10);
    }
}

void verify_dual_path(Report& rep, const std::vector<RepParams>& pairs) {
    for (const RepParams& p : pairs)
        rep.residual("wavefunction dual path " + rep_tag(p),
                     dual_path_ratio(p, 1e-10, 1e-12), 1.0);
}

void verify_hahn(Report& rep) {
    const double params[] = {-0.5, -0.3, 0.0, 1.0, 2.5};
    const int sizes[] = {1, 5, 20, 60};
    for (int N : sizes) {
        double worst = 0.0;
        for (double a : params)
            for (double b : params)
                worst = std::max(worst, hahn_gram_max_dev(a, b, N));
        rep.residual("hahn orthonormality    N=" + std::to_string(N), worst, 1e-12);
    }
}

void verify_krawtchouk(Report& rep) {
    HalfInt j = HalfInt::from_twice(13);
    double worst_even = 0.0, worst_odd = 0.0;
    for (int n = 0; n <= 6; ++n)
        for (long long tq = 1; tq <= 13; tq += 2) {
            KrawtchoukResiduals kr = krawtchouk_reduction_check(n, HalfInt::from_twice(tq), j);
            worst_even = std::max(worst_even, kr.even);
            worst_odd = std::max(worst_odd, kr.odd);
        }
    rep.residual("krawtchouk identity even j=13/2", worst_even, 1e-10);
    rep.residual("krawtchouk identity odd  j=13/2", worst_odd, 1e-10);
    rep.residual("krawtchouk full table  j=65/2 alpha=-0.5",
                 krawtchouk_table_max_err(RepParams::from_two_j(65, -0.5)), 1e-10);
}

void verify_parabose(Report& rep) {
    for (double a : {0.3, 0.5, 1.0, 2.0})
        for (int trunc : {50, 200}) {
            ParaboseParams p(a, trunc);
            std::string tag = "a=" + fmt_short(a) + " trunc=" + std::to_string(trunc);
            OspResiduals r = verify_osp12(p);
            rep.residual("parabose osp interior  " + tag,
                         std::max(r.interior_plus, r.interior_minus), 1e-12);
            rep.residual("parabose H interior    " + tag, r.hamiltonian_interior, 1e-12);
            rep.residual("parabose jacobi match  " + tag, jacobi_action_check(p), 1e-12);
        }
    OspResiduals edge = verify_osp12(ParaboseParams(1.0, 10));
    rep.flag("parabose truncation edge a=1 trunc=10",
             std::min(edge.full_plus, edge.full_minus) >= 1.0,
             "full residual " + fmt_short(std::min(edge.full_plus, edge.full_minus)) +
                 " (expected >= 1)");
}

void verify_psi(Report& rep) {
    for (double a : {0.3, 0.5, 2.0}) {
        Eigen::MatrixXd G = psi_gram(a, 6);
        double dev = (G - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff();
        rep.residual("psi gram matrix        a=" + fmt_short(a), dev, 1e-8);
    }
    rep.residual("psi hermite form       a=0.5", psi_hermite_max_dev(6), 1e-12);

    double worst_rec = 0.0;
    for (double a : {0.3, 0.5, 2.0})
        for (int n = 0; n <= 10; ++n)
            for (double x : {-1.7, -0.4, 0.9, 2.3}) {
                double rhs = jacobi_coefficient(n, a) * psi(n + 1, a, x);
                if (n > 0)
                    rhs += jacobi_coefficient(n - 1, a) * psi(n - 1, a, x);
                worst_rec = std::max(worst_rec, std::abs(x * psi(n, a, x) - rhs));
            }
    rep.residual("psi recurrence n<=10", worst_rec, 1e-10);
}

void verify_limits(Report& rep, const fs::path& fixture) {
    std::optional<ThresholdTable> table;
    if (fs::exists(fixture))
        table = ThresholdTable::load(fixture);

    const std::vector<long long> seq = {21, 61, 201, 401};
    for (int level : {0, 1, 2, 3})
        for (double alpha : {-0.7, -0.5, 1.0}) {
            ScanOutcome out = run_scan(level, alpha, seq);
            std::string tag =
                "n=" + std::to_string(level) + " alpha=" + fmt_short(alpha);
            rep.flag("parabose limit monotone " + tag, out.monotone,
                     "final error " + fmt_short(out.final_error));
            if (table) {
                auto bound = table->lookup(level, alpha, seq.back());
                if (bound)
                    rep.residual("parabose limit frozen   " + tag, out.final_error, *bound);
                else
                    rep.flag("parabose limit frozen   " + tag, false,
                             "no threshold in fixture");
            }
        }
    if (!table)
        rep.flag("parabose limit fixture", true,
                 "not found at " + fixture.string() + "; thresholds not enforced");

    LaguerreLimitErrors l1 = laguerre_limit_check(1, 0.0, 1.0, seq);
    LaguerreLimitErrors l2 = laguerre_limit_check(2, 1.0, 1.5, seq);
    rep.flag("laguerre limit decreasing", nonincreasing(l1.even) && nonincreasing(l1.odd) &&
                                              nonincreasing(l2.even) && nonincreasing(l2.odd),
             "n=1 final " + fmt_short(l1.even.back()) + ", n=2 final " +
                 fmt_short(l2.even.back()));

    const std::vector<long long> wseq = {61, 201, 401};
    bool wmono = true;
    double wfinal = 0.0;
    for (int n : {0, 1, 2})
        for (double alpha : {-0.5, 0.0, 1.0})
            for (double x : {0.5, 1.0, 1.5}) {
                std::vector<double> errs = weight_norm_ratio_errors(n, alpha, x, wseq);
                wmono = wmono && nonincreasing(errs);
                wfinal = std::max(wfinal, errs.back());
            }
    rep.flag("weight/norm ratio limit decreasing", wmono, "max final " + fmt_short(wfinal));
}

int cmd_verify(std::optional<long long> two_j, std::optional<double> alpha,
               const fs::path& fixture) {
    std::vector<long long> two_j_list = two_j ? std::vector<long long>{*two_j}
                                              : std::vector<long long>{1, 3, 9, 65};
    std::vector<double> alpha_list = alpha ? std::vector<double>{*alpha}
                                           : std::vector<double>{-0.9, -0.7, -0.5, 0.0, 1.0, 5.0};

    std::vector<RepParams> vector_pairs, dual_pairs;
    if (two_j || alpha) {
        RepParams p = RepParams::from_two_j(two_j.value_or(65), alpha.value_or(1.0));
        vector_pairs = {p};
        dual_pairs = {p};
    } else {
        vector_pairs = {RepParams::from_two_j(65, 1.0), RepParams::from_two_j(65, -0.7)};
        dual_pairs = {RepParams::from_two_j(65, -0.7), RepParams::from_two_j(65, -0.5),
                      RepParams::from_two_j(65, 1.0)};
    }

    Report rep;
    verify_algebra(rep, two_j_list, alpha_list);
    verify_oscillator(rep, two_j_list, alpha_list);
    verify_eigenvectors(rep, vector_pairs);
    verify_dual_path(rep, dual_pairs);
    verify_hahn(rep);
    verify_krawtchouk(rep);
    verify_parabose(rep);
    verify_psi(rep);
    verify_limits(rep, fixture);
    return rep.print(std::cout) == 0 ? 0 : 1;
}

// ------------------------------------------------------------------ output

std::string csv_spectrum(const RepParams& rep, const Eigen::VectorXd& ev, bool with_k) {
    std::string out = with_k ? "k_twice,q\n" : "index,p\n";
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        long long label = with_k ? -rep.j.twice() + 2 * i : static_cast<long long>(i);
        out += std::to_string(label) + "," + fmt17(ev(i)) + "\n";
    }
    return out;
}

json json_metadata_osc(const RepParams& rep) {
    return json{{"two_j", rep.j.twice()}, {"alpha", rep.alpha}};
}

int cmd_spectrum(long long two_j, double alpha, const std::string& op,
                 const std::string& format, const std::string& output) {
    RepParams rep = RepParams::from_two_j(two_j, alpha);
    bool position = (op == "position");
    Eigen::VectorXd ev =
        position ? position_spectrum_closed_form(rep).eigenvalues
                 : momentum_spectrum_numeric(rep);

    std::string content;
    if (format == "csv") {
        content = csv_spectrum(rep, ev, position);
    } else {
        json doc;
        doc["metadata"] = json_metadata_osc(rep);
        doc["metadata"]["operator"] = op;
        if (position) {
            std::vector<long long> k;
            for (Eigen::Index i = 0; i < ev.size(); ++i)
                k.push_back(-rep.j.twice() + 2 * i);
            doc["k_twice"] = k;
        }
        doc["eigenvalues"] = std::vector<double>(ev.data(), ev.data() + ev.size());
        content = doc.dump(2) + "\n";
    }
    if (output.empty())
        std::cout << content;
    else
        write_file(output, content);
    return 0;
}

void emit_phi_file(const fs::path& dir, const std::string& stem, const RepParams& rep,
                   const WavefunctionTable& table, int level, const std::string& format) {
    if (level < 0 || level >= rep.dim())
        throw std::invalid_argument("level " + std::to_string(level) +
                                    " out of range [0, 2j]");
    Eigen::VectorXd phi = table.values.row(level).transpose();
    require_unit_norm(phi, stem);

    if (format == "csv") {
        std::string out = "k_twice,q,phi\n";
        for (int i = 0; i < rep.dim(); ++i)
            out += std::to_string(-rep.j.twice() + 2 * i) + "," + fmt17(table.abscissae(i)) +
                   "," + fmt17(phi(i)) + "\n";
        write_file(dir / (stem + ".csv"), out);
    } else {
        json doc;
        doc["metadata"] = json_metadata_osc(rep);
        doc["metadata"]["n"] = level;
        std::vector<long long> k;
        for (int i = 0; i < rep.dim(); ++i)
            k.push_back(-rep.j.twice() + 2 * i);
        doc["k_twice"] = k;
        doc["q"] = std::vector<double>(table.abscissae.data(),
                                       table.abscissae.data() + rep.dim());
        doc["phi"] = std::vector<double>(phi.data(), phi.data() + rep.dim());
        write_file(dir / (stem + ".json"), doc.dump(2) + "\n");
    }
}

int cmd_wavefunction(long long two_j, double alpha, const std::vector<int>& levels,
                     const std::string& format, const std::string& output) {
    RepParams rep = RepParams::from_two_j(two_j, alpha);
    WavefunctionTable table = wavefunction_table(rep);
    fs::path dir = resolve_outdir(output);
    for (int level : levels) {
        std::string stem = "wavefunction_twoj" + std::to_string(two_j) + "_alpha" +
                           fmt_short(alpha) + "_n" + std::to_string(level);
        emit_phi_file(dir, stem, rep, table, level, format);
    }
    return 0;
}

int cmd_figure1(long long two_j, const std::vector<double>& alphas,
                const std::vector<int>& levels, const std::string& format,
                const std::string& output) {
    fs::path dir = resolve_outdir(output);
    for (double alpha : alphas) {
        RepParams rep = RepParams::from_two_j(two_j, alpha);
        WavefunctionTable table = wavefunction_table(rep);
        for (int level : levels) {
            std::string stem = "fig1_alpha" + fmt_short(alpha) + "_n" + std::to_string(level);
            emit_phi_file(dir, stem, rep, table, level, format);
        }
    }
    return 0;
}

int cmd_figure2(const std::vector<double>& a_values, const std::vector<int>& levels,
                double xmin, double xmax, int points, const std::string& format,
                const std::string& output) {
    if (points < 2 || !(xmin < xmax))
        throw std::invalid_argument("figure2: need points >= 2 and xmin < xmax");
    fs::path dir = resolve_outdir(output);
    for (double a : a_values)
        for (int level : levels) {
            std::string stem = "fig2_a" + fmt_short(a) + "_n" + std::to_string(level);
            if (format == "csv") {
                std::string out = "x,psi\n";
                for (int i = 0; i < points; ++i) {
                    double x = xmin + (xmax - xmin) * i / (points - 1);
                    out += fmt17(x) + "," + fmt17(psi(level, a, x)) + "\n";
                }
                write_file(dir / (stem + ".csv"), out);
            } else {
                json doc;
                doc["metadata"] = json{{"a", a}, {"n", level}};
                std::vector<double> xs, ps;
                for (int i = 0; i < points; ++i) {
                    double x = xmin + (xmax - xmin) * i / (points - 1);
                    xs.push_back(x);
                    ps.push_back(psi(level, a, x)); // non-finite values serialize as null
                }
                doc["x"] = xs;
                doc["psi"] = ps;
                write_file(dir / (stem + ".json"), doc.dump(2) + "\n");
            }
        }
    return 0;
}

int cmd_limit_scan(const std::vector<int>& levels, const std::vector<double>& alphas,
                   const std::vector<long long>& two_j_seq, const fs::path& fixture,
                   bool write_fixture, double margin) {
    ThresholdTable table;
    bool have_fixture = fs::exists(fixture);
    if (have_fixture)
        table = ThresholdTable::load(fixture);

    bool ok = true;
    std::printf("level  alpha  two_j  max_error\n");
    for (int level : levels)
        for (double alpha : alphas) {
            ScanOutcome out = run_scan(level, alpha, two_j_seq);
            for (const LimitScanPoint& p : out.scan.points) {
                if (p.skipped)
                    std::printf("%5d  %5s  %5lld  skipped (level absent)\n", level,
                                fmt_short(alpha).c_str(), p.two_j);
                else
                    std::printf("%5d  %5s  %5lld  %.17g\n", level, fmt_short(alpha).c_str(),
                                p.two_j, p.max_error);
            }
            if (!out.any)
                continue;
            if (write_fixture) {
                table.upsert({level, alpha, two_j_seq.back(),
                              round_up_2sig(margin * out.final_error)});
                continue;
            }
            if (!out.monotone) {
                std::printf("  -> error sequence not non-increasing (5%% slack)\n");
                ok = false;
            }
            if (have_fixture) {
                auto bound = table.lookup(level, alpha, two_j_seq.back());
                if (!bound) {
                    std::printf("  -> no frozen threshold for this (level, alpha)\n");
                    ok = false;
                } else if (out.final_error > *bound) {
                    std::printf("  -> final error %.3g exceeds frozen threshold %.3g\n",
                                out.final_error, *bound);
                    ok = false;
                }
            }
        }

    if (write_fixture) {
        table.save(fixture);
        std::printf("wrote %zu thresholds to %s\n", table.entries().size(),
                    fixture.string().c_str());
        return 0;
    }
    if (!have_fixture)
        std::printf("note: fixture %s not found; thresholds not enforced\n",
                    fixture.string().c_str());
    return ok ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"finite oscillator model on the parity-deformed u(2) algebra"};
    app.require_subcommand(1);
    std::string format = "csv", output, op = "position";

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::optional<long long> v_two_j;
    std::optional<double> v_alpha;
    std::string v_fixture = "data/limit_thresholds.txt";
    verify->add_option("--two-j", v_two_j, "restrict representation checks to this 2j (odd)");
    verify->add_option("--alpha", v_alpha, "restrict representation checks to this alpha");
    verify->add_option("--fixture", v_fixture, "parabose-limit threshold fixture");

    auto* spectrum = app.add_subcommand("spectrum", "emit position or momentum spectrum");
    long long s_two_j = 65;
    double s_alpha = 1.0;
    spectrum->add_option("--two-j", s_two_j, "2j (odd)");
    spectrum->add_option("--alpha", s_alpha, "deformation parameter (> -1)");
    spectrum->add_option("--operator", op, "position|momentum")
        ->check(CLI::IsMember({"position", "momentum"}));
    spectrum->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_option("-o,--output", output, "output file (stdout when omitted)");

    auto* wavefunction = app.add_subcommand("wavefunction", "emit wavefunction tables");
    long long w_two_j = 65;
    double w_alpha = 1.0;
    std::vector<int> w_levels = {0, 1, 2};
    wavefunction->add_option("--two-j", w_two_j, "2j (odd)");
    wavefunction->add_option("--alpha", w_alpha, "deformation parameter (> -1)");
    wavefunction->add_option("--levels", w_levels, "levels n to emit");
    wavefunction->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    wavefunction->add_option("-o,--output", output,
                             "output directory (default $HAHNOSC_OUTPUT_DIR or .)");

    auto* figure1 = app.add_subcommand("figure1", "emit discrete wavefunction data files");
    long long f1_two_j = 65;
    std::vector<double> f1_alphas = {-0.5, -0.7, 1.0};
    std::vector<int> f1_levels = {0, 1, 2, 65};
    figure1->add_option("--two-j", f1_two_j, "2j (odd)");
    figure1->add_option("--alphas", f1_alphas, "deformation parameters");
    figure1->add_option("--levels", f1_levels, "levels n to emit");
    figure1->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    figure1->add_option("-o,--output", output, "output directory");

    auto* figure2 = app.add_subcommand("figure2", "emit parabose wavefunction data files");
    std::vector<double> f2_a = {0.5, 0.3, 2.0};
    std::vector<int> f2_levels = {0, 1, 2};
    double f2_xmin = -5.0, f2_xmax = 5.0;
    int f2_points = 501;
    figure2->add_option("--a-values", f2_a, "parabose orders a (> 0)");
    figure2->add_option("--levels", f2_levels, "levels n to emit");
    figure2->add_option("--xmin", f2_xmin, "grid start");
    figure2->add_option("--xmax", f2_xmax, "grid end");
    figure2->add_option("--points", f2_points, "grid size");
    figure2->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    figure2->add_option("-o,--output", output, "output directory");

    auto* limit = app.add_subcommand("limit-scan", "parabose-limit convergence scan");
    std::vector<int> l_levels = {0, 1, 2, 3};
    std::vector<double> l_alphas = {-0.7, -0.5, 1.0};
    std::vector<long long> l_two_j = {21, 61, 201, 401};
    std::string l_fixture = "data/limit_thresholds.txt";
    bool l_write = false;
    double l_margin = 1.3;
    limit->add_option("--levels", l_levels, "levels n to scan");
    limit->add_option("--alphas", l_alphas, "deformation parameters");
    limit->add_option("--two-j", l_two_j, "ascending 2j sequence (odd)");
    limit->add_option("--fixture", l_fixture, "frozen threshold fixture path");
    limit->add_flag("--write-fixture", l_write, "record thresholds instead of checking");
    limit->add_option("--margin", l_margin, "safety factor applied when writing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(v_two_j, v_alpha, v_fixture);
        if (spectrum->parsed())
            return cmd_spectrum(s_two_j, s_alpha, op, format, output);
        if (wavefunction->parsed())
            return cmd_wavefunction(w_two_j, w_alpha, w_levels, format, output);
        if (figure1->parsed())
            return cmd_figure1(f1_two_j, f1_alphas, f1_levels, format, output);
        if (figure2->parsed())
            return cmd_figure2(f2_a, f2_levels, f2_xmin, f2_xmax, f2_points, format, output);
        if (limit->parsed())
            return cmd_limit_scan(l_levels, l_alphas, l_two_j, l_fixture, l_write, l_margin);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace hahnosc
