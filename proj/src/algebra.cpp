#include "hahnosc/algebra.hpp"

namespace hahnosc {

double raising_coefficient(const RepParams& rep, HalfInt m) {
    if (m < -rep.j || !(m < rep.j))
        throw std::invalid_argument("raising_coefficient: m out of [-j, j)");
    double j = rep.j.value(), mv = m.value(), a = rep.alpha;
    if (is_even_integer(rep.j + m))
        return std::sqrt((j - mv + 2.0 * a + 1.0) * (j + mv + 2.0 * a + 2.0));
    return std::sqrt((j - mv) * (j + mv + 1.0));
}

OperatorMatrix build_C(const RepParams& rep) {
    int d = rep.dim();
    return static_cast<double>(d) * OperatorMatrix::Identity(d, d);
}

OperatorMatrix build_P(const RepParams& rep) {
    int d = rep.dim();
    OperatorMatrix P = OperatorMatrix::Zero(d, d);
    for (int r = 0; r < d; ++r)
        P(r, r) = (r % 2 == 0) ? 1.0 : -1.0; // (-1)^(j+m), r = j+m
    return P;
}

OperatorMatrix build_J0(const RepParams& rep) {
    int d = rep.dim();
    OperatorMatrix J0 = OperatorMatrix::Zero(d, d);
    for (int r = 0; r < d; ++r)
        J0(r, r) = (-rep.j + HalfInt::whole(r)).value();
    return J0;
}

OperatorMatrix build_Jplus(const RepParams& rep) {
    int d = rep.dim();
    OperatorMatrix Jp = OperatorMatrix::Zero(d, d);
    for (int r = 0; r + 1 < d; ++r) {
        HalfInt m = -rep.j + HalfInt::whole(r);
        Jp(r + 1, r) = raising_coefficient(rep, m);
    }
    return Jp;
}

OperatorMatrix build_Jminus(const RepParams& rep) {
    return build_Jplus(rep).transpose();
}

RelationResiduals verify_defining_relations(const RepParams& rep) {
    OperatorMatrix C = build_C(rep), P = build_P(rep), J0 = build_J0(rep);
    OperatorMatrix Jp = build_Jplus(rep), Jm = build_Jminus(rep);
    int d = rep.dim();
    double g = 2.0 * rep.alpha + 1.0;

    RelationResiduals r;
    r.comm_P_J0 = (P * J0 - J0 * P).norm();
    r.anti_P_Jplus = (P * Jp + Jp * P).norm();
    r.anti_P_Jminus = (P * Jm + Jm * P).norm();
    r.parity_square = (P * P - OperatorMatrix::Identity(d, d)).norm();
    r.comm_J0_ladder = std::max((J0 * Jp - Jp * J0 - Jp).norm(),
                                (J0 * Jm - Jm * J0 + Jm).norm());
    r.comm_Jplus_Jminus =
        (Jp * Jm - Jm * Jp - (2.0 * J0 - g * g * P - g * C * P)).norm();
    return r;
}

bool verify_irreducibility(const RepParams& rep) {
    OperatorMatrix Jp = build_Jplus(rep), Jm = build_Jminus(rep);
    int d = rep.dim();
    for (int r = 0; r + 1 < d; ++r)
        if (!(std::abs(Jp(r + 1, r)) > 0.0) || !(std::abs(Jm(r, r + 1)) > 0.0))
            return false;
    return true;
}

} // namespace hahnosc
