#include "hahnosc/oscillator.hpp"

#include <numbers>
#include <sstream>

#include "hahnosc/algebra.hpp"
#include "hahnosc/specfun.hpp"

namespace hahnosc {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

Eigen::VectorXd selfadjoint_eigenvalues(const OperatorMatrix& A, const char* what) {
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(A, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error(std::string(what) + ": eigensolver did not converge");
    return solver.eigenvalues();
}

} // namespace

OperatorMatrix build_position(const RepParams& rep) {
    OperatorMatrix Jp = build_Jplus(rep);
    return 0.5 * (Jp + OperatorMatrix(Jp.transpose()));
}

OperatorMatrix build_momentum(const RepParams& rep) {
    OperatorMatrix Jp = build_Jplus(rep);
    return 0.5 * I * (Jp - OperatorMatrix(Jp.transpose()));
}

OperatorMatrix build_hamiltonian(const RepParams& rep) {
    return build_J0(rep) + 0.5 * build_C(rep);
}

Eigen::VectorXd position_offdiagonal(const RepParams& rep) {
    int d = rep.dim();
    Eigen::VectorXd M(d - 1);
    for (int r = 0; r + 1 < d; ++r)
        M(r) = raising_coefficient(rep, -rep.j + HalfInt::whole(r));
    return M;
}

double PositionSpectrum::q(HalfInt k) const {
    if (k.is_integer() || k < -params.j || params.j < k)
        throw std::invalid_argument("PositionSpectrum::q: 2k must be odd with |k| <= j");
    long long i = (params.j + k).twice() / 2;
    return eigenvalues(static_cast<Eigen::Index>(i));
}

double PositionSpectrum::middle_gap() const {
    Eigen::Index d = eigenvalues.size();
    return eigenvalues(d / 2) - eigenvalues(d / 2 - 1);
}

PositionSpectrum position_spectrum_closed_form(const RepParams& rep) {
    int d = rep.dim();
    Eigen::VectorXd ev(d);
    for (int i = 0; i < d; ++i) {
        HalfInt k = -rep.j + HalfInt::whole(i);
        double mag = rep.alpha + 0.5 + std::abs(k.value());
        ev(i) = (k.twice() < 0) ? -mag : mag;
    }
    return PositionSpectrum{rep, ev};
}

Eigen::VectorXd position_spectrum_numeric(const RepParams& rep) {
    return selfadjoint_eigenvalues(build_position(rep), "position_spectrum_numeric");
}

Eigen::VectorXd momentum_spectrum_numeric(const RepParams& rep) {
    return selfadjoint_eigenvalues(build_momentum(rep), "momentum_spectrum_numeric");
}

Eigen::MatrixXd eigenvector_matrix(const RepParams& rep) {
    int N = static_cast<int>((rep.j.twice() - 1) / 2); // j - 1/2
    int d = rep.dim();                                 // 2N + 2
    double a = rep.alpha;
    double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    Eigen::MatrixXd U(d, d);
    for (int s = 0; s <= N; ++s) {
        int col_plus = N + 1 + s; // k = s + 1/2
        int col_minus = N - s;    // k = -(s + 1/2)
        for (int r = 0; r <= N; ++r) {
            double sr = (r % 2 == 0) ? 1.0 : -1.0;
            double even = sr * inv_sqrt2 * hahn_orthonormal(HahnSpec(s, a, a + 1.0, N), r);
            U(2 * r, col_plus) = even;
            U(2 * r, col_minus) = even;
            double odd = sr * inv_sqrt2 * hahn_orthonormal(HahnSpec(s, a + 1.0, a, N), r);
            U(2 * r + 1, col_plus) = odd;
            U(2 * r + 1, col_minus) = -odd;
        }
    }
    return U;
}

double wavefunction_direct(const RepParams& rep, int level, HalfInt k) {
    if (level < 0 || level > static_cast<int>(rep.j.twice()))
        throw std::invalid_argument("wavefunction_direct: level out of [0, 2j]");
    if (k.is_integer() || k < -rep.j || rep.j < k)
        throw std::invalid_argument("wavefunction_direct: 2k must be odd with |k| <= j");

    int N = static_cast<int>((rep.j.twice() - 1) / 2);
    int s = static_cast<int>((std::abs(k.twice()) - 1) / 2); // |k| - 1/2
    double a = rep.alpha;
    int n = level / 2;

    // Even levels use the (alpha, alpha+1) weight/norm pair and lower
    // parameter alpha+1, odd levels the swapped pair and alpha+2. The 3F2
    // upper parameters (-q_k + alpha + 1, q_k + alpha + 1, -n) reduce to
    // integers in the first slot; passing them exactly keeps the series
    // termination detection robust.
    bool even = (level % 2 == 0);
    LogWeight w = even ? hahn_weight(n, a, a + 1.0, N) : hahn_weight(n, a + 1.0, a, N);
    LogWeight h = even ? hahn_norm(s, a, a + 1.0, N) : hahn_norm(s, a + 1.0, a, N);
    double f = hyp3f2_terminating(-static_cast<double>(s), s + 2.0 * a + 2.0,
                                  -static_cast<double>(n),
                                  even ? a + 1.0 : a + 2.0,
                                  -static_cast<double>(N));
    double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    double val = sign_n / std::numbers::sqrt2 *
                 std::exp(0.5 * (w.log_magnitude - h.log_magnitude)) * f;
    if (k.twice() < 0 && !even)
        val = -val; // Phi_n(-q) = (-1)^n Phi_n(q)
    return val;
}

Eigen::VectorXd wavefunction_row(const RepParams& rep, int level) {
    int d = rep.dim();
    Eigen::VectorXd row(d);
    for (int i = d / 2; i < d; ++i) { // positive k, then mirror by parity
        HalfInt k = -rep.j + HalfInt::whole(i);
        double v = wavefunction_direct(rep, level, k);
        row(i) = v;
        row(d - 1 - i) = (level % 2 == 0) ? v : -v;
    }
    return row;
}

WavefunctionTable wavefunction_table(const RepParams& rep, double rel_tol, double abs_floor) {
    WavefunctionTable table{rep, position_spectrum_closed_form(rep).eigenvalues,
                            eigenvector_matrix(rep)};
    int d = rep.dim();
    for (int level = 0; level < d; ++level) {
        Eigen::VectorXd direct = wavefunction_row(rep, level);
        for (int i = 0; i < d; ++i) {
            double u = table.values(level, i), v = direct(i);
            if (std::abs(u - v) > rel_tol * std::max(std::abs(u), std::abs(v)) + abs_floor) {
                std::ostringstream msg;
                msg << "wavefunction_table: eigenvector and 3F2 routes disagree at level "
                    << level << ", slot " << i << ": " << u << " vs " << v;
                throw std::runtime_error(msg.str());
            }
        }
    }
    return table;
}

} // namespace hahnosc
