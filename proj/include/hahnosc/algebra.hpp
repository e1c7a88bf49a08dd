#ifndef HAHNOSC_ALGEBRA_HPP
#define HAHNOSC_ALGEBRA_HPP

#include <Eigen/Dense>

#include "hahnosc/types.hpp"

namespace hahnosc {

using OperatorMatrix = Eigen::MatrixXcd;

// Matrix representations of the deformed u(2) generators on V_j, in the
// eigenbasis |j,m>, m = -j..j, row/column index r = j + m. All are real;
// the complex type keeps them composable with i-weighted combinations.
OperatorMatrix build_C(const RepParams& rep);      // central, (2j+1) I
OperatorMatrix build_P(const RepParams& rep);      // parity, diag (-1)^(j+m)
OperatorMatrix build_J0(const RepParams& rep);     // diag m
OperatorMatrix build_Jplus(const RepParams& rep);  // raising, subdiagonal
OperatorMatrix build_Jminus(const RepParams& rep); // lowering, = Jplus^T

// Coefficient c in J+ |j,m> = c |j,m+1>: sqrt((j-m)(j+m+1)) when j+m is odd,
// sqrt((j-m+2alpha+1)(j+m+2alpha+2)) when j+m is even. Pre: m in [-j, j).
double raising_coefficient(const RepParams& rep, HalfInt m);

// Frobenius norms of the defining-relation residuals:
//   [P, J0],  {P, J+},  {P, J-},  P^2 - I,  [J0, J+-] -+ J+-,
//   [J+, J-] - (2 J0 - (2alpha+1)^2 P - (2alpha+1) C P).
struct RelationResiduals {
    double comm_P_J0 = 0;
    double anti_P_Jplus = 0;
    double anti_P_Jminus = 0;
    double parity_square = 0;
    double comm_J0_ladder = 0; // max over the two ladder relations
    double comm_Jplus_Jminus = 0;

    double max() const {
        return std::max({comm_P_J0, anti_P_Jplus, anti_P_Jminus, parity_square,
                         comm_J0_ladder, comm_Jplus_Jminus});
    }
};

RelationResiduals verify_defining_relations(const RepParams& rep);

// True when no ladder coefficient vanishes, i.e. J+ connects the lowest
// weight up to the highest and J- back down, so no proper invariant
// subspace exists.
bool verify_irreducibility(const RepParams& rep);

} // namespace hahnosc

#endif
