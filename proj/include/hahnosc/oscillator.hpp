#ifndef HAHNOSC_OSCILLATOR_HPP
#define HAHNOSC_OSCILLATOR_HPP

#include <Eigen/Dense>

#include "hahnosc/types.hpp"

namespace hahnosc {

using OperatorMatrix = Eigen::MatrixXcd;

// Oscillator triple on V_j: position (J+ + J-)/2, momentum i(J+ - J-)/2,
// Hamiltonian J0 + C/2 with spectrum n + 1/2, n = 0..2j.
OperatorMatrix build_position(const RepParams& rep);
OperatorMatrix build_momentum(const RepParams& rep);
OperatorMatrix build_hamiltonian(const RepParams& rep);

// Off-diagonal entries M_k, k = 0..2j-1, of the tridiagonal matrix 2 q^:
// M_k = sqrt((k+1)(2j-k)) for odd k, sqrt((k+2alpha+2)(2j-k+2alpha+1)) for
// even k.
Eigen::VectorXd position_offdiagonal(const RepParams& rep);

// Spectrum of the position operator q^. The eigenvalues come in pairs
//   q_{+-k} = +-(alpha + k + 1/2),  k = 1/2, 3/2, ..., j,
// indexed here ascending, slot i <-> k = -j + i (2k always odd).
struct PositionSpectrum {
    RepParams params;
    Eigen::VectorXd eigenvalues; // ascending

    double q(HalfInt k) const;   // eigenvalue labelled by half-odd k
    double middle_gap() const;   // q_{1/2} - q_{-1/2} = 2 alpha + 2
};

PositionSpectrum position_spectrum_closed_form(const RepParams& rep);

// Eigenvalues of q^ from a self-adjoint eigensolver, ascending. Throws
// std::runtime_error if the solver fails to converge.
Eigen::VectorXd position_spectrum_numeric(const RepParams& rep);
Eigen::VectorXd momentum_spectrum_numeric(const RepParams& rep);

// Orthogonal matrix U of position eigenvectors, built entirely from
// orthonormal Hahn functions Qt_s(r) with parameter pairs (alpha, alpha+1)
// for even rows and (alpha+1, alpha) for odd rows. Row index j+m, column
// index j+k. Columns satisfy 2 q^ u_k = 2 q_k u_k and U U^T = I.
Eigen::MatrixXd eigenvector_matrix(const RepParams& rep);

// Wavefunction Phi_level(q_k) evaluated by the closed 3F2 formula in the
// eigenvalue q_k itself (no reference to the eigenvector matrix); negative k
// follows from parity Phi_n(-q) = (-1)^n Phi_n(q). Pre: 0 <= level <= 2j,
// 2k odd, |k| <= j.
double wavefunction_direct(const RepParams& rep, int level, HalfInt k);

// All positions at once for one level, slot i <-> k = -j + i.
Eigen::VectorXd wavefunction_row(const RepParams& rep, int level);

// Full table values(level, i) = Phi_level(q_{k = -j+i}). Built from the
// eigenvector matrix, then cross-checked entrywise against the direct 3F2
// route; a relative disagreement beyond rel_tol (with floor abs_floor)
// throws std::runtime_error.
struct WavefunctionTable {
    RepParams params;
    Eigen::VectorXd abscissae; // q_k, ascending
    Eigen::MatrixXd values;
};

WavefunctionTable wavefunction_table(const RepParams& rep, double rel_tol = 1e-10,
                                     double abs_floor = 1e-12);

} // namespace hahnosc

#endif
