#include "hahnosc/specfun.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdlib>
#include <limits>

namespace hahnosc {

namespace {

using quad = __float128;

// Nonpositive-integer test used for series termination and pole detection.
// Callers pass such parameters exactly representable (-n, -x, -N as small
// integers), so the tolerance only has to absorb zero arithmetic jitter;
// keeping it tight avoids mistaking nearby irrational parameters (e.g.
// -sqrt(j) x + alpha + 1 in limit scans) for terminating ones.
bool nonpositive_integer(double a, long long& m_out) {
    double r = std::nearbyint(a);
    if (r > 0.0)
        return false;
    if (std::abs(a - r) > 1e-12 * std::max(1.0, std::abs(a)))
        return false;
    m_out = static_cast<long long>(-r);
    return true;
}

// Sum of a terminating pFq-type series with unit step z:
//   sum_k prod_i (a_i)_k / prod_j (b_j)_k * z^k / k!.
// Terminates at the smallest index forced by the upper parameters; a lower
// parameter reaching zero before that index is a pole. Terms are accumulated
// in binary128 with compensated summation: in the regimes used here the
// partial terms exceed the final sum by up to ~30 decimal digits, which
// double (and long double) cannot absorb.
template <std::size_t P, std::size_t Q>
double sum_terminating(const std::array<double, P>& upper,
                       const std::array<double, Q>& lower, double z) {
    long long n_term = -1;
    for (double a : upper) {
        long long m;
        if (nonpositive_integer(a, m) && (n_term < 0 || m < n_term))
            n_term = m;
    }
    if (n_term < 0)
        throw std::domain_error("hypergeometric series does not terminate");
    for (double b : lower) {
        long long m;
        if (nonpositive_integer(b, m) && m < n_term)
            throw std::domain_error("hypergeometric series hits a lower-parameter pole");
    }

    quad sum = 1.0, comp = 0.0, term = 1.0;
    for (long long k = 0; k < n_term; ++k) {
        quad ratio = static_cast<quad>(z);
        for (double a : upper)
            ratio *= static_cast<quad>(a) + static_cast<quad>(k);
        for (double b : lower)
            ratio /= static_cast<quad>(b) + static_cast<quad>(k);
        ratio /= static_cast<quad>(k) + static_cast<quad>(1);
        term *= ratio;

        quad y = term - comp;
        quad t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return static_cast<double>(sum + comp);
}

LogWeight log_weight_mul(LogWeight a, LogWeight b) {
    return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
}

LogWeight log_weight_div(LogWeight a, LogWeight b) {
    return {a.log_magnitude - b.log_magnitude, a.sign * b.sign};
}

// log Gamma(z+k) - log Gamma(z) for positive z, i.e. log (z)_k with k >= 0.
double log_pochhammer_pos(double z, double k) {
    return std::lgamma(z + k) - std::lgamma(z);
}

} // namespace

double pochhammer(double a, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i)
        p *= a + i;
    return p;
}

LogWeight log_gamma_signed(double z) {
    if (z <= 0.0 && z == std::nearbyint(z))
        throw std::domain_error("log_gamma_signed: pole at z=" + std::to_string(z));
    // glibc lgamma returns log|Gamma|; the sign of Gamma on (-m-1, -m)
    // alternates, positive for even floor(z).
    int sign = 1;
    if (z < 0.0 && static_cast<long long>(std::floor(z)) % 2 != 0)
        sign = -1;
    return {std::lgamma(z), sign};
}

LogWeight log_binomial_real(double top, int k) {
    if (k < 0)
        throw std::domain_error("log_binomial_real: k must be nonnegative");
    LogWeight num = log_gamma_signed(top + 1.0);
    LogWeight den = log_gamma_signed(top - k + 1.0);
    return {num.log_magnitude - den.log_magnitude - std::lgamma(k + 1.0),
            num.sign * den.sign};
}

double hyp3f2_terminating(double a1, double a2, double a3, double b1, double b2) {
    return sum_terminating<3, 2>({a1, a2, a3}, {b1, b2}, 1.0);
}

double hyp2f1_arg2_terminating(double a1, double a2, double b1) {
    return sum_terminating<2, 1>({a1, a2}, {b1}, 2.0);
}

double hyp1f1_terminating(double a1, double b1, double t) {
    return sum_terminating<1, 1>({a1}, {b1}, t);
}

double hahn_Q(const HahnSpec& spec, int x) {
    if (x < 0 || x > spec.N)
        throw std::invalid_argument("hahn_Q: x out of range [0, N]");
    return hyp3f2_terminating(-static_cast<double>(spec.n),
                              spec.n + spec.alpha + spec.beta + 1.0,
                              -static_cast<double>(x),
                              spec.alpha + 1.0,
                              -static_cast<double>(spec.N));
}

LogWeight hahn_weight(int x, double alpha, double beta, int N) {
    if (x < 0 || x > N)
        throw std::invalid_argument("hahn_weight: x out of range [0, N]");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("hahn_weight: need alpha > -1 and beta > -1");
    return log_weight_mul(log_binomial_real(alpha + x, x),
                          log_binomial_real(N + beta - x, N - x));
}

LogWeight hahn_norm(double n, double alpha, double beta, int N) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("hahn_norm: need alpha > -1 and beta > -1");
    bool integer_degree = (n == std::nearbyint(n));
    if (integer_degree ? (n < 0.0 || n > N) : (n <= -1.0 || n > N))
        throw std::invalid_argument("hahn_norm: degree out of range, n=" + std::to_string(n));

    // (n+a+b+1)_{N+1} / (2n+a+b+1) is rewritten as
    //   [(n+a+b+1)/(2n+a+b+1)] * Gamma(n+a+b+N+2) / Gamma(n+a+b+2)
    // so that alpha+beta+1 <= 0 at n = 0 (where both linear factors coincide
    // and the ratio is exactly 1) stays finite.
    double u = n + alpha + beta + 1.0;
    double v = 2.0 * n + alpha + beta + 1.0;
    LogWeight ratio{0.0, 1};
    if (n != 0.0) {
        if (u == 0.0 || v == 0.0)
            throw std::domain_error("hahn_norm: degenerate parameters, n+alpha+beta+1 or "
                                    "2n+alpha+beta+1 vanishes");
        ratio = {std::log(std::abs(u)) - std::log(std::abs(v)),
                 (u < 0.0 ? -1 : 1) * (v < 0.0 ? -1 : 1)};
    }

    LogWeight g_top = log_gamma_signed(n + alpha + beta + N + 2.0);
    LogWeight g_bot = log_gamma_signed(n + alpha + beta + 2.0);
    LogWeight result = log_weight_mul(ratio, log_weight_div(g_top, g_bot));

    // Remaining factors are ratios of Gammas at positive arguments.
    double rest = log_pochhammer_pos(beta + 1.0, n)   // (b+1)_n
                + std::lgamma(n + 1.0)                // n!
                - log_pochhammer_pos(alpha + 1.0, n)  // (a+1)_n
                - log_pochhammer_pos(N - n + 1.0, n)  // (N-n+1)_n
                - std::lgamma(N + 1.0);               // N!
    result.log_magnitude += rest;
    return result;
}

namespace {

// Recurrence coefficients of x Q_n = -A_n Q_{n+1} + (A_n + C_n) Q_n - C_n Q_{n-1}.
// At n = 0 the factor (n+a+b+1)/(2n+a+b+1) is identically 1 (it is 0/0 when
// a+b = -1), so it is removed rather than evaluated, as in hahn_norm.
double hahn_rec_A(int n, double a, double b, int N) {
    double ratio = (n == 0) ? 1.0 : (n + a + b + 1) / (2 * n + a + b + 1);
    return ratio * (n + a + 1) * (N - n) / (2 * n + a + b + 2);
}

double hahn_rec_C(int n, double a, double b, int N) {
    if (n == 0) return 0.0;
    return n * (n + a + b + N + 1) * (n + b) / ((2 * n + a + b) * (2 * n + a + b + 1));
}

}  // namespace

double hahn_orthonormal(const HahnSpec& spec, int x) {
    if (x < 0 || x > spec.N)
        throw std::invalid_argument("hahn_orthonormal: x out of range [0, N]");
    // In the orthonormal scaling P_n = Q_n / sqrt(h_n) the recurrence reads
    // x P_n = -b_n P_{n+1} + a_n P_n - b_{n-1} P_{n-1} with a_n = A_n + C_n
    // and b_n = sqrt(A_n C_{n+1}), using h_{n+1}/h_n = C_{n+1}/A_n. (The
    // off-diagonals are negative because Q_n's leading coefficient carries
    // the sign of (-N)_n.) Hence (Qt_0(x), ..., Qt_N(x)) is the unit
    // eigenvector of an (N+1)x(N+1) symmetric tridiagonal matrix for the
    // exact eigenvalue x, with unit gaps to its neighbours. Twisted
    // factorization of T - xI extracts it from products of local pivot
    // ratios, accurate at every node; both the terminating 3F2 sum (~1e34
    // cancellation at N = 60, beyond binary128) and the forward degree
    // recurrence (edge columns are minimal solutions) lose digits there.
    const int size = spec.N + 1;
    Eigen::VectorXd shifted(size), off(size);  // off(n) = -b_n, off(N) = 0
    for (int n = 0; n < size; ++n) {
        double A = hahn_rec_A(n, spec.alpha, spec.beta, spec.N);
        double C = hahn_rec_C(n, spec.alpha, spec.beta, spec.N);
        shifted(n) = A + C - x;
        off(n) = (n + 1 < size)
                     ? -std::sqrt(A * hahn_rec_C(n + 1, spec.alpha, spec.beta, spec.N))
                     : 0.0;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    auto nonzero = [&](double pivot, int i) {
        return pivot != 0.0 ? pivot : eps * (1.0 + std::abs(shifted(i)));
    };
    Eigen::VectorXd dplus(size), dminus(size);  // top-down LDL^T / bottom-up UDU^T pivots
    dplus(0) = shifted(0);
    for (int i = 1; i < size; ++i)
        dplus(i) = shifted(i) - off(i - 1) * off(i - 1) / nonzero(dplus(i - 1), i - 1);
    dminus(size - 1) = shifted(size - 1);
    for (int i = size - 2; i >= 0; --i)
        dminus(i) = shifted(i) - off(i) * off(i) / nonzero(dminus(i + 1), i + 1);
    int twist = 0;  // index of the smallest twisted residual gamma_k
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size; ++i) {
        double gamma = std::abs(dplus(i) + dminus(i) - shifted(i));
        if (gamma < best) {
            best = gamma;
            twist = i;
        }
    }
    Eigen::VectorXd v(size);
    v(twist) = 1.0;
    for (int i = twist - 1; i >= 0; --i)
        v(i) = -off(i) * v(i + 1) / nonzero(dplus(i), i);
    for (int i = twist + 1; i < size; ++i)
        v(i) = -off(i - 1) * v(i - 1) / nonzero(dminus(i), i);
    v /= v.norm();
    if (v(0) < 0.0) v = -v;  // Qt_0(x) = sqrt(w(x)/h_0) > 0 anchors the sign
    return v(spec.n);
}

double laguerre(int n, double a, double t) {
    if (n < 0)
        throw std::invalid_argument("laguerre: n must be nonnegative");
    if (!(a > -1.0))
        throw std::invalid_argument("laguerre: need a > -1");
    if (n == 0)
        return 1.0;
    double lm1 = 1.0, l = a + 1.0 - t;
    for (int k = 1; k < n; ++k) {
        double lp1 = ((2.0 * k + a + 1.0 - t) * l - (k + a) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double hermite(int n, double x) {
    if (n < 0)
        throw std::invalid_argument("hermite: n must be nonnegative");
    if (n == 0)
        return 1.0;
    double hm1 = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double hp1 = 2.0 * x * h - 2.0 * k * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

double dual_hahn_lambda(int n, double alpha, double beta) {
    return n * (n + alpha + beta + 1.0);
}

} // namespace hahnosc
