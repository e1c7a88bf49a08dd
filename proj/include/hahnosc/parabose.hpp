#ifndef HAHNOSC_PARABOSE_HPP
#define HAHNOSC_PARABOSE_HPP

#include <Eigen/Dense>
#include <functional>

namespace hahnosc {

// Parabose oscillator parameters: order a > 0 and the truncation size of the
// (infinite) Fock-space matrices. trunc >= 2 so that at least one interior
// relation is testable.
struct ParaboseParams {
    double a;
    int trunc;

    ParaboseParams(double a_, int trunc_) : a(a_), trunc(trunc_) {
        if (!(a > 0.0))
            throw std::invalid_argument("ParaboseParams: need a > 0");
        if (trunc < 2)
            throw std::invalid_argument("ParaboseParams: need trunc >= 2");
    }
};

// Truncated creation/annihilation matrices on span{|0>, ..., |trunc-1>}:
//   b+ |2n>   = sqrt(2(n+a))  |2n+1>,   b+ |2n+1> = sqrt(2(n+1)) |2n+2>,
// and b- = (b+)^T.
Eigen::MatrixXd build_bplus(const ParaboseParams& par);
Eigen::MatrixXd build_bminus(const ParaboseParams& par);

// Coupling of the parabose position q^ = (b+ + b-)/sqrt(2) between |n> and
// |n+1>: sqrt(n/2 + a) for even n, sqrt((n+1)/2) for odd n.
double jacobi_coefficient(int n, double a);

// Residuals of the osp(1|2) relations [{b-,b+}, b+-] -+ 2 b+-. The interior
// fields restrict to the leading (trunc-2) block where truncation cannot
// leak and are *relative* Frobenius residuals, ||R|| / ||b+-||: the matrix
// scale grows like 2*trunc, so rounding of the entries alone puts an
// absolute floor of ~scale*eps under the residual, and only the relative
// form measures the identity independently of trunc. The full fields are
// absolute Frobenius norms and are expected to be large (truncation edge).
// hamiltonian_interior is the max deviation of the diagonal of {b-,b+}/2
// from n + a over n < trunc-1.
struct OspResiduals {
    double interior_plus = 0;
    double interior_minus = 0;
    double full_plus = 0;
    double full_minus = 0;
    double hamiltonian_interior = 0;
};

OspResiduals verify_osp12(const ParaboseParams& par);

// Max entrywise difference between (b+ + b-)/sqrt(2) and the tridiagonal
// matrix assembled from jacobi_coefficient — same operator, two code paths.
double jacobi_action_check(const ParaboseParams& par);

// Parabose wavefunction of order a at x:
//   Psi_2m   = (-1)^m sqrt(m! / Gamma(m+a))   |x|^(a-1/2) e^(-x^2/2) L_m^(a-1)(x^2),
//   Psi_2m+1 = (-1)^m sqrt(m! / Gamma(m+a+1)) |x|^(a-1/2) e^(-x^2/2) x L_m^(a)(x^2).
// At x = 0 the even functions are 0 for a > 1/2, finite for a = 1/2 and
// (IEEE) infinite for a < 1/2; odd ones vanish for every a > 0.
double psi(int n, double a, double x);

// Adaptive Gauss-Kronrod (G7, K15) quadrature of f over [lo, hi], bisecting
// until the K15-G7 error estimate of each panel drops below tol scaled by
// panel fraction. All nodes are interior, so integrable endpoint
// singularities (|x|^(2a-1) at 0) are never evaluated.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-10, int max_depth = 48);

// Gram matrix G(m, n) = integral of Psi_m Psi_n over [-cut, cut], split at
// the x = 0 singularity. Orthonormality holds up to the Gaussian tail beyond
// the cut (< 1e-25 for cut = 12 at the orders used here).
Eigen::MatrixXd psi_gram(double a, int nmax, double tol = 1e-10, double cut = 12.0);

} // namespace hahnosc

#endif
