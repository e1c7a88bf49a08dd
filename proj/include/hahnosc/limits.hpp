#ifndef HAHNOSC_LIMITS_HPP
#define HAHNOSC_LIMITS_HPP

#include <filesystem>
#include <optional>
#include <vector>

#include "hahnosc/types.hpp"

namespace hahnosc {

// One j-step of the parabose-limit error scan.
struct LimitScanPoint {
    long long two_j;
    double max_error; // NaN when skipped
    bool skipped;     // level > 2j: that level is absent from V_j
};

struct LimitScan {
    int level;
    double alpha;
    std::vector<double> x_grid;
    std::vector<LimitScanPoint> points;
};

// Convergence of the discrete wavefunction to the parabose one of order
// alpha+1: for each j the error is max over the x grid of
//   | j^(1/4) Phi_level(q_k)  -  Psi^(alpha+1)_level(x') |,
// where q_k is the position eigenvalue nearest to sqrt(j) x and
// x' = q_k / sqrt(j) is the exact discrete abscissa (no interpolation; the
// grid is restricted to |x| <= 2, far from the spectral edge).
LimitScan parabose_limit_scan(int level, double alpha, const std::vector<double>& x_grid,
                              const std::vector<long long>& two_j_seq);

// Symmetric grid +-{0.25, 0.5, ..., 2} used by tests and the CLI; x = 0 is
// excluded (Psi of order a < 1/2 is singular there).
std::vector<double> default_limit_grid();

// The two alpha = -1/2 reduction identities turning the wavefunction 3F2
// into a binomial-prefactored 2F1 at argument 2, evaluated as |LHS - RHS|:
//   even: 3F2(-q+1/2, q+1/2, -n; 1/2, -j+1/2)
//         = (-1)^n C(2j,2n)/C(j-1/2,n) 2F1(-2n, -j-q; -2j; 2),
//   odd:  3F2(-q+1/2, q+1/2, -n; 3/2, -j+1/2)
//         = -(-1)^n/(2q) C(2j,2n+1)/C(j-1/2,n) 2F1(-2n-1, -j-q; -2j; 2).
// Pre: 2j odd, q in {1/2, ..., j}, 0 <= n <= j - 1/2.
struct KrawtchoukResiduals {
    double even;
    double odd;
};

KrawtchoukResiduals krawtchouk_reduction_check(int n, HalfInt q, HalfInt j);

// Wavefunction at alpha = -1/2 computed through the reduced 2F1 route (the
// right-hand sides above) instead of the 3F2 — an independent third path for
// cross-checking the full table. Pre: rep.alpha == -1/2 exactly.
double wavefunction_krawtchouk(const RepParams& rep, int level, HalfInt k);

// Laguerre limit of the wavefunction 3F2: per-j errors of
//   3F2(-sqrt(j)x+a+1, sqrt(j)x+a+1, -n; a+1, -j+1/2)  vs  n!/(a+1)_n L_n^(a)(x^2)
// (even variant) and the lower-parameter a+2 / order a+1 odd variant.
struct LaguerreLimitErrors {
    std::vector<double> even;
    std::vector<double> odd;
};

LaguerreLimitErrors laguerre_limit_check(int n, double alpha, double x,
                                         const std::vector<long long>& two_j_seq);

// Stirling tail of the weight/norm ratio: per-j errors of
//   sqrt(j) w(n; a, a+1, N) / (2 h(sqrt(j)x - a - 1; a, a+1, N))
// against (a+1)_n / (n! Gamma(a+1)) x^(2a+1) e^(-x^2), N = j - 1/2. The norm
// is evaluated at a real (non-integer) degree. Pre: x > 0.
std::vector<double> weight_norm_ratio_errors(int n, double alpha, double x,
                                             const std::vector<long long>& two_j_seq);

// Frozen thresholds for the parabose-limit scan, calibrated once and then
// asserted (the scan itself is the oracle; no analytic rate exists). Text
// format: first significant line `v1`, then rows
//   <level> <alpha> <two_j_max> <threshold>
// with `#` comments and blank lines ignored.
class ThresholdTable {
public:
    struct Entry {
        int level;
        double alpha;
        long long two_j_max;
        double threshold;
    };

    static ThresholdTable load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    // Replaces the entry with the same key, or appends.
    void upsert(const Entry& e);
    std::optional<double> lookup(int level, double alpha, long long two_j_max) const;
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

} // namespace hahnosc

#endif
