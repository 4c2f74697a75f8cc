#pragma once

#include <variant>

#include "oddu/space.hpp"

namespace oddu {

/// epsilon_i: bar(1)^-1 for i > 0, -1 for i < 0.
Scalar epsilon(const Ring& ring, int i);

/// 0-based HyperbolicFirst slot of e_i, i in {+-1, ..., +-m}.
int hyperbolic_slot(const SpaceConfig& cfg, int i);

/// Matrix of the Eichler-Siegel-Dickson transvection
///   T_{u,v}(r): w -> w + u bar(1)^-1 (<v,w> + r<u,w>) + v<u,w>
/// in the requested basis order; u, v are given in that same order.
Matrix esd_matrix(const SpaceConfig& cfg, BasisOrder order, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v, const Scalar& r);

/// The ESD side conditions with L = L_max: <u,v> = 0, (u,0) and (v,r) in L_max.
/// Vectors in HyperbolicFirst coordinates.
bool esd_validate(const SpaceConfig& cfg, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v, const Scalar& r);

/// Matrices of T_1(u,a) and T_-1(u,a) in ModuleFirst order, built from the
/// explicit entry formulas (tests cross-check them against the ESD route:
/// T_1(u,a) = T_{e_1,-u}(-a), T_-1(u,a) = T_{e_-1, u bar(1)^-1}(-a)).
/// u is in ModuleFirst coordinates. t_plus1 requires the e_-1 coordinate of
/// u to vanish, t_minus1 the e_1 coordinate; otherwise BadCoordinate.
Matrix t_plus1(const SpaceConfig& cfg, const std::vector<Scalar>& u, const Scalar& a);
Matrix t_minus1(const SpaceConfig& cfg, const std::vector<Scalar>& u, const Scalar& a);

struct EsdData {
    std::vector<Scalar> u, v;
    Scalar r;
};
struct ShortData { // T_{chi_i - chi_j}(r)
    int i = 0, j = 0;
    Scalar r;
};
struct UltrashortData { // T_{chi_i}(u, r), (u, r) in L_max
    int i = 0;
    HeisElem h;
};
struct LongData { // T_{2 chi_i}(r), r in L_ev
    int i = 0;
    Scalar r;
};
struct TPlus1Data { // T_1(u, a), u ModuleFirst
    std::vector<Scalar> u;
    Scalar a;
};
struct TMinus1Data { // T_-1(u, a), u ModuleFirst
    std::vector<Scalar> u;
    Scalar a;
};

struct TransvectionSpec {
    std::variant<EsdData, ShortData, UltrashortData, LongData, TPlus1Data, TMinus1Data> data;
    BasisOrder order = BasisOrder::HyperbolicFirst;
};

/// Matrix of the requested generator, delegating to esd_matrix with the
/// defining arguments. Throws BadIndex for out-of-range root indices,
/// InvalidFormParameter when the L_max/L_ev preconditions fail.
Matrix root_transvection(const SpaceConfig& cfg, const TransvectionSpec& spec);

/// Exact check of bar(1)^-1 * bar_transpose(M) * Psi * M = Psi
/// (M in HyperbolicFirst order).
bool isometry_check(const SpaceConfig& cfg, const Matrix& m);

/// Congruence defect of M at x: the Heisenberg element
/// (Mx - x, <x - Mx, x>) whose trace must vanish for M = I (mod L_max).
HeisElem congruence_defect(const SpaceConfig& cfg, const Matrix& m, const std::vector<Scalar>& x);

/// Decides M = I (mod L_max) by evaluating the defect trace on all standard
/// basis vectors and pairwise sums b_i + b_j, i < j.
bool congruent_mod_Lmax(const SpaceConfig& cfg, const Matrix& m);

} // namespace oddu
