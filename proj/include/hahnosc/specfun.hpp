#ifndef HAHNOSC_SPECFUN_HPP
#define HAHNOSC_SPECFUN_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace hahnosc {

// Sign-carrying logarithmic scalar. Hahn weights and norms overflow double
// well before N = 60 (h(60)/h(0) ~ 1e33 on top of 1e260-sized factors), so
// they are kept as log|value| plus a sign and only exponentiated after
// cancellation-friendly combinations.
struct LogWeight {
    double log_magnitude = 0.0;
    int sign = 1; // +1 or -1; exact zeros are rejected upstream

    double value() const { return sign * std::exp(log_magnitude); }
};

// Parameter set (n, alpha, beta, N) of a Hahn polynomial Q_n(x; alpha, beta, N).
// Validated at construction: 0 <= n <= N, alpha > -1, beta > -1.
struct HahnSpec {
    int n;
    double alpha;
    double beta;
    int N;

    HahnSpec(int n_, double alpha_, double beta_, int N_)
        : n(n_), alpha(alpha_), beta(beta_), N(N_) {
        if (N < 0 || n < 0 || n > N)
            throw std::invalid_argument("HahnSpec: need 0 <= n <= N, got n=" +
                                        std::to_string(n_) + ", N=" + std::to_string(N_));
        if (!(alpha > -1.0) || !(beta > -1.0))
            throw std::invalid_argument("HahnSpec: need alpha > -1 and beta > -1");
    }
};

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1. Pre: k >= 0.
double pochhammer(double a, int k);

// log|Gamma(z)| with the sign of Gamma(z). Throws std::domain_error at the
// poles z = 0, -1, -2, ...
LogWeight log_gamma_signed(double z);

// Generalised binomial C(top, k) = Gamma(top+1) / (k! Gamma(top-k+1)) for real
// top, integer k >= 0, as a signed logarithm. Throws std::domain_error when a
// Gamma argument is a nonpositive integer.
LogWeight log_binomial_real(double top, int k);

// Terminating hypergeometric sums. Each series must terminate through a
// nonpositive-integer upper parameter; the sum runs to the smallest such
// index. Throws std::domain_error if no upper parameter is a nonpositive
// integer, or if a lower parameter hits a pole before termination.
//
// The partial sums suffer severe cancellation (individual terms reach ~1e20
// at N = 32 and ~1e30 at degree 65 in the regimes used here), so the terms
// are accumulated in binary128; arguments and result stay double.
double hyp3f2_terminating(double a1, double a2, double a3, double b1, double b2); // 3F2(...; 1)
double hyp2f1_arg2_terminating(double a1, double a2, double b1);                  // 2F1(...; 2)
double hyp1f1_terminating(double a1, double b1, double t);                        // 1F1(...; t)

// Hahn polynomial Q_n(x; alpha, beta, N) = 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1).
// Pre: 0 <= x <= N.
double hahn_Q(const HahnSpec& spec, int x);

// Hahn weight w(x; alpha, beta, N) = C(alpha+x, x) C(N+beta-x, N-x), x = 0..N.
LogWeight hahn_weight(int x, double alpha, double beta, int N);

// Hahn squared norm
//   h(n) = (n+a+b+1)_{N+1} (b+1)_n n! / ((2n+a+b+1) (a+1)_n (N-n+1)_n N!).
// The degree may be real (Gamma continuation, needed for tail-ratio limits
// where n = sqrt(j) x - alpha - 1); integer degrees must lie in [0, N], real
// ones in (-1, N].
LogWeight hahn_norm(double n, double alpha, double beta, int N);

// Orthonormal Hahn function Qt_n(x) = sqrt(w(x)) Q_n(x) / sqrt(h(n)).
// Satisfies sum_x Qt_l(x) Qt_n(x) = delta_{ln}. Evaluated by the symmetric
// three-term recurrence in the degree (Jacobi-matrix form), not the 3F2 sum:
// the terminating series cancels catastrophically for N ~ 60 (terms reach
// ~1e34 against O(1) values, beyond even binary128), while the recurrence
// has no cancellation. The series route survives in hahn_Q and in the
// wavefunction 3F2 path, where the two are cross-checked against each other.
double hahn_orthonormal(const HahnSpec& spec, int x);

// Laguerre polynomial L_n^(a)(t) by the ascending three-term recurrence.
// Pre: a > -1. The series route is available as
// C(n+a, n) * hyp1f1_terminating(-n, a+1, t) and is cross-checked in tests.
double laguerre(int n, double a, double t);

// Hermite polynomial H_n(x), physicists' convention.
double hermite(int n, double x);

// Dual Hahn eigenvalue lambda(n) = n (n + alpha + beta + 1).
double dual_hahn_lambda(int n, double alpha, double beta);

} // namespace hahnosc

#endif
