#pragma once

#include "oddu/transvection.hpp"

namespace oddu {

/// v = (a_1, ..., a_{n+2m-1}), the border data of L(v) and L(v)*.
/// Slot convention (fixed by matching the first column of L(v)): a_1 sits at
/// the e_-1 slot, a_2, ..., a_{2m-1} at e_2, e_-2, ..., e_m, e_-m, and
/// a_2m, ..., a_{n+2m-1} at v_1, ..., v_n. Equivalently: the entries are the
/// trailing HyperbolicFirst coordinates (everything except the e_1 slot).
struct VVector {
    std::vector<Scalar> a;
};

/// alpha = I + d^t (bar v) mu: differs from the identity in row 1 only.
Matrix build_alpha(const SpaceConfig& cfg, const VVector& v);
/// beta = I - bar(1)^-1 rho (bar v)^t c: differs in column 1 only.
Matrix build_beta(const SpaceConfig& cfg, const VVector& v);

/// L(v) = [[1, 0], [v^t, alpha]], HyperbolicFirst order.
Matrix build_L(const SpaceConfig& cfg, const VVector& v);
/// L(v)* = [[1, v], [0, beta]], HyperbolicFirst order.
Matrix build_L_star(const SpaceConfig& cfg, const VVector& v);

/// bar(a_1) - a_1 = q_small(a_2, ..., a_{n+2m-1}). Holds iff L(v) is an
/// isometry; implies membership in U(R, L_max).
bool condition_D(const SpaceConfig& cfg, const VVector& v);
/// bar(bar(1) a_1) - bar(1) a_1
///   = (bar w) (psi_tilde_prime_{m-1} perp (bar(1)^-1)^2 phi)^t w^t.
bool condition_E(const SpaceConfig& cfg, const VVector& v);

/// Elementary word whose product is exactly L(v) (resp. L(v)*).
/// Construction: the bordered [[1,0],[v^t,I]] block is a run of column
/// transvections, and diag(1, alpha) is the 4-block commutator
/// [[1,y],[0,I]] [[1,0],[d^t,I]] [[1,-y],[0,I]] [[1,0],[-d^t,I]] with
/// y = -(bar v) mu, valid because (bar v) mu d^t = 0. Symmetrically for
/// beta via c rho = 0. At most 5(n+2m-1) factors.
ElementaryWord factor_L(const SpaceConfig& cfg, const VVector& v);
ElementaryWord factor_L_star(const SpaceConfig& cfg, const VVector& v);

enum class TransvKind { TMinus1, TPlus1 };

/// Outcome of conjugating L(v) or L(v)* by P: the matched generator data
/// and the Heisenberg pair that certifies its form-parameter membership.
/// The witness is the (v, r)-slot data of the underlying ESD transvection;
/// it lies in L_max exactly when the matched matrix is an isometry (for
/// TMinus1 this is condition (D), for TPlus1 the isometry criterion of L*).
struct ConjugationResult {
    TransvKind kind = TransvKind::TMinus1;
    std::vector<Scalar> u; // ModuleFirst coordinates
    Scalar a;
    HeisElem witness;
};

/// P^t L(v) P = T_-1(u_1, a_1) with
/// u_1 = -a_2m v_1 - ... - a_{n+2m-1} v_n - a_2 e_2 - ... - a_{2m-1} e_-m.
/// Exact for every v; no side conditions.
ConjugationResult conj_L_to_transvection(const SpaceConfig& cfg, const VVector& v);
/// P^t L(v)* P = T_1(u_2, -bar(1) a_1) with the phi^-1-weighted u_2.
ConjugationResult conj_Lstar_to_transvection(const SpaceConfig& cfg, const VVector& v);

/// Matrix of the matched generator (ModuleFirst order).
Matrix matrix_of(const SpaceConfig& cfg, const ConjugationResult& res);

/// Inverse direction: the v with P^t L(v) P = T_-1(u, a) (kind TMinus1)
/// or P^t L(v)* P = T_1(u, a) (kind TPlus1). Requires (u, a) in L_max and
/// zero e_1, e_-1 coordinates of u (ModuleFirst).
VVector transvection_to_vaserstein(const SpaceConfig& cfg, TransvKind kind,
                                   const std::vector<Scalar>& u, const Scalar& a);

} // namespace oddu
