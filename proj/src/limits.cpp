#include "hahnosc/limits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "hahnosc/oscillator.hpp"
#include "hahnosc/parabose.hpp"
#include "hahnosc/specfun.hpp"

namespace hahnosc {

namespace {

Eigen::Index nearest_index(const Eigen::VectorXd& sorted, double target) {
    const double* begin = sorted.data();
    const double* end = begin + sorted.size();
    const double* it = std::lower_bound(begin, end, target);
    if (it == begin)
        return 0;
    if (it == end)
        return sorted.size() - 1;
    // Ties resolve to the lower index, deterministically.
    return (*it - target < target - *(it - 1)) ? (it - begin) : (it - begin - 1);
}

} // namespace

LimitScan parabose_limit_scan(int level, double alpha, const std::vector<double>& x_grid,
                              const std::vector<long long>& two_j_seq) {
    if (level < 0)
        throw std::invalid_argument("parabose_limit_scan: level must be nonnegative");
    LimitScan scan{level, alpha, x_grid, {}};
    for (long long two_j : two_j_seq) {
        if (level > two_j) {
            scan.points.push_back({two_j, std::numeric_limits<double>::quiet_NaN(), true});
            continue;
        }
        RepParams rep = RepParams::from_two_j(two_j, alpha);
        PositionSpectrum spec = position_spectrum_closed_form(rep);
        Eigen::VectorXd row = wavefunction_row(rep, level);
        double j = two_j / 2.0;
        double root_j = std::sqrt(j), quarter_j = std::pow(j, 0.25);

        double worst = 0.0;
        for (double x : x_grid) {
            Eigen::Index i = nearest_index(spec.eigenvalues, root_j * x);
            double x_snap = spec.eigenvalues(i) / root_j;
            double err = std::abs(quarter_j * row(i) - psi(level, alpha + 1.0, x_snap));
            worst = std::max(worst, err);
        }
        scan.points.push_back({two_j, worst, false});
    }
    return scan;
}

std::vector<double> default_limit_grid() {
    std::vector<double> grid;
    for (int i = -8; i <= 8; ++i)
        if (i != 0)
            grid.push_back(0.25 * i);
    return grid;
}

KrawtchoukResiduals krawtchouk_reduction_check(int n, HalfInt q, HalfInt j) {
    if (j.is_integer() || j.twice() <= 0)
        throw std::invalid_argument("krawtchouk_reduction_check: 2j must be odd and positive");
    if (q.is_integer() || q.twice() <= 0 || j < q)
        throw std::invalid_argument("krawtchouk_reduction_check: need q in {1/2, ..., j}");
    long long N = (j.twice() - 1) / 2;
    if (n < 0 || n > N)
        throw std::invalid_argument("krawtchouk_reduction_check: need 0 <= n <= j - 1/2");

    double s = (q.twice() - 1) / 2.0;        // q - 1/2
    double two_j = static_cast<double>(j.twice());
    double j_plus_q = (j.twice() + q.twice()) / 2.0;

    double lhs_even = hyp3f2_terminating(-s, s + 1.0, -n, 0.5, -static_cast<double>(N));
    double pref_even = ((n % 2 == 0) ? 1.0 : -1.0) *
                       std::exp(log_binomial_real(two_j, 2 * n).log_magnitude -
                                log_binomial_real(static_cast<double>(N), n).log_magnitude);
    double rhs_even = pref_even * hyp2f1_arg2_terminating(-2.0 * n, -j_plus_q, -two_j);

    double lhs_odd = hyp3f2_terminating(-s, s + 1.0, -n, 1.5, -static_cast<double>(N));
    double pref_odd = -((n % 2 == 0) ? 1.0 : -1.0) / (2.0 * q.value()) *
                      std::exp(log_binomial_real(two_j, 2 * n + 1).log_magnitude -
                               log_binomial_real(static_cast<double>(N), n).log_magnitude);
    double rhs_odd = pref_odd * hyp2f1_arg2_terminating(-(2.0 * n + 1.0), -j_plus_q, -two_j);

    return {std::abs(lhs_even - rhs_even), std::abs(lhs_odd - rhs_odd)};
}

double wavefunction_krawtchouk(const RepParams& rep, int level, HalfInt k) {
    if (rep.alpha != -0.5)
        throw std::invalid_argument("wavefunction_krawtchouk: requires alpha = -1/2");
    if (level < 0 || level > static_cast<int>(rep.j.twice()))
        throw std::invalid_argument("wavefunction_krawtchouk: level out of [0, 2j]");
    if (k.is_integer() || k < -rep.j || rep.j < k)
        throw std::invalid_argument("wavefunction_krawtchouk: 2k must be odd with |k| <= j");

    int N = static_cast<int>((rep.j.twice() - 1) / 2);
    HalfInt q = (k.twice() > 0) ? k : -k;
    double two_j = static_cast<double>(rep.j.twice());
    double j_plus_q = (rep.j + q).value();
    bool even = (level % 2 == 0);
    int n = level / 2;

    double f2f1 = hyp2f1_arg2_terminating(even ? -2.0 * n : -(2.0 * n + 1.0), -j_plus_q, -two_j);
    double pref = std::exp(log_binomial_real(two_j, even ? 2 * n : 2 * n + 1).log_magnitude -
                           log_binomial_real(static_cast<double>(N), n).log_magnitude);
    if (!even)
        pref *= -1.0 / (2.0 * q.value()); // the (-1)^n factors of LHS and RHS cancel

    LogWeight w = even ? hahn_weight(n, -0.5, 0.5, N) : hahn_weight(n, 0.5, -0.5, N);
    LogWeight h = even ? hahn_norm((q.twice() - 1) / 2.0, -0.5, 0.5, N)
                       : hahn_norm((q.twice() - 1) / 2.0, 0.5, -0.5, N);
    double val = 1.0 / std::numbers::sqrt2 *
                 std::exp(0.5 * (w.log_magnitude - h.log_magnitude)) * pref * f2f1;
    if (k.twice() < 0 && !even)
        val = -val;
    return val;
}

LaguerreLimitErrors laguerre_limit_check(int n, double alpha, double x,
                                         const std::vector<long long>& two_j_seq) {
    if (n < 0 || !(alpha > -1.0))
        throw std::invalid_argument("laguerre_limit_check: need n >= 0 and alpha > -1");
    double n_fact = std::tgamma(n + 1.0);
    double target_even = n_fact / pochhammer(alpha + 1.0, n) * laguerre(n, alpha, x * x);
    double target_odd = n_fact / pochhammer(alpha + 2.0, n) * laguerre(n, alpha + 1.0, x * x);

    LaguerreLimitErrors errs;
    for (long long two_j : two_j_seq) {
        double N = (two_j - 1) / 2.0;
        double rx = std::sqrt(two_j / 2.0) * x;
        double f_even =
            hyp3f2_terminating(-rx + alpha + 1.0, rx + alpha + 1.0, -n, alpha + 1.0, -N);
        double f_odd =
            hyp3f2_terminating(-rx + alpha + 1.0, rx + alpha + 1.0, -n, alpha + 2.0, -N);
        errs.even.push_back(std::abs(f_even - target_even));
        errs.odd.push_back(std::abs(f_odd - target_odd));
    }
    return errs;
}

std::vector<double> weight_norm_ratio_errors(int n, double alpha, double x,
                                             const std::vector<long long>& two_j_seq) {
    if (n < 0 || !(alpha > -1.0) || !(x > 0.0))
        throw std::invalid_argument("weight_norm_ratio_errors: need n >= 0, alpha > -1, x > 0");
    double target = std::exp(std::lgamma(alpha + 1.0 + n) - 2.0 * std::lgamma(alpha + 1.0) -
                             std::lgamma(n + 1.0)) *
                    std::pow(x, 2.0 * alpha + 1.0) * std::exp(-x * x);

    std::vector<double> errs;
    for (long long two_j : two_j_seq) {
        double j = two_j / 2.0;
        int N = static_cast<int>((two_j - 1) / 2);
        double degree = std::sqrt(j) * x - alpha - 1.0; // real-degree norm argument
        LogWeight w = hahn_weight(n, alpha, alpha + 1.0, N);
        LogWeight h = hahn_norm(degree, alpha, alpha + 1.0, N);
        double ratio = h.sign * std::exp(0.5 * std::log(j) + w.log_magnitude -
                                         h.log_magnitude - std::log(2.0));
        errs.push_back(std::abs(ratio - target));
    }
    return errs;
}

ThresholdTable ThresholdTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("ThresholdTable: cannot open " + path.string());
    ThresholdTable table;
    std::string line;
    bool version_seen = false;
    while (std::getline(in, line)) {
        std::string_view sv(line);
        if (auto pos = sv.find('#'); pos != std::string_view::npos)
            sv = sv.substr(0, pos);
        std::istringstream row{std::string(sv)};
        std::string first;
        if (!(row >> first))
            continue; // blank or comment-only line
        if (!version_seen) {
            if (first != "v1")
                throw std::runtime_error("ThresholdTable: unsupported format '" + first + "'");
            version_seen = true;
            continue;
        }
        Entry e;
        std::string trailing;
        std::istringstream parse{std::string(sv)};
        if (!(parse >> e.level >> e.alpha >> e.two_j_max >> e.threshold) || (parse >> trailing))
            throw std::runtime_error("ThresholdTable: malformed row '" + line + "'");
        table.entries_.push_back(e);
    }
    if (!version_seen)
        throw std::runtime_error("ThresholdTable: missing version line in " + path.string());
    return table;
}

void ThresholdTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("ThresholdTable: cannot write " + path.string());
    out << "# parabose-limit error thresholds: level alpha two_j_max threshold\n";
    out << "v1\n";
    char buf[128];
    for (const Entry& e : entries_) {
        std::snprintf(buf, sizeof buf, "%d %.17g %lld %.17g\n", e.level, e.alpha,
                      e.two_j_max, e.threshold);
        out << buf;
    }
    if (!out.flush())
        throw std::runtime_error("ThresholdTable: write failed for " + path.string());
}

void ThresholdTable::upsert(const Entry& e) {
    for (Entry& old : entries_)
        if (old.level == e.level && old.two_j_max == e.two_j_max &&
            std::abs(old.alpha - e.alpha) <= 1e-12 * std::max(1.0, std::abs(e.alpha))) {
            old = e;
            return;
        }
    entries_.push_back(e);
}

std::optional<double> ThresholdTable::lookup(int level, double alpha, long long two_j_max) const {
    for (const Entry& e : entries_)
        if (e.level == level && e.two_j_max == two_j_max &&
            std::abs(e.alpha - alpha) <= 1e-12 * std::max(1.0, std::abs(alpha)))
            return e.threshold;
    return std::nullopt;
}

} // namespace hahnosc
