#pragma once

#include <vector>

#include "oddu/matrix.hpp"

namespace oddu {

/// Basis conventions for the odd hyperbolic space H^m + V0 of rank n + 2m.
/// HyperbolicFirst: e_1, e_-1, ..., e_m, e_-m, v_1, ..., v_n (form matrix Psi).
/// ModuleFirst:     v_1, ..., v_n, e_1, e_-1, ..., e_m, e_-m (the order the
/// transvection matrices are written in). The two are related by conjugation with P.
enum class BasisOrder { HyperbolicFirst, ModuleFirst };

/// A Heisenberg-group element (u, r); u in HyperbolicFirst coordinates.
struct HeisElem {
    std::vector<Scalar> u;
    Scalar r;
};

/// The odd hyperbolic space data: ring, hyperbolic rank m >= 1, V0 rank
/// n >= 0 with Gram matrix phi and its inverse. Construction checks the
/// dimensions and phi * phi_inv = phi_inv * phi = I; whether phi is
/// anti-Hermitian is a separate, reportable check (anti_hermitian_check).
class SpaceConfig {
public:
    static SpaceConfig make(Ring ring, int m, int n, Matrix phi, Matrix phi_inv);

    const Ring& ring() const { return ring_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return n_ + 2 * m_; }
    const Matrix& phi() const { return phi_; }
    const Matrix& phi_inv() const { return phi_inv_; }
    const Matrix& psi() const { return psi_; }
    const Matrix& psi_inv() const { return psi_inv_; }

private:
    SpaceConfig(Ring ring, int m, int n, Matrix phi, Matrix phi_inv, Matrix psi, Matrix psi_inv)
        : ring_(std::move(ring)), m_(m), n_(n), phi_(std::move(phi)),
          phi_inv_(std::move(phi_inv)), psi_(std::move(psi)), psi_inv_(std::move(psi_inv)) {}

    Ring ring_;
    int m_;
    int n_;
    Matrix phi_;
    Matrix phi_inv_;
    Matrix psi_;
    Matrix psi_inv_;
};

/// 2r x 2r block diagonal of [[0, 1], [-bar(1), 0]]; r = 0 gives the empty
/// matrix (the degenerate blocks the m = 1 formulas need).
Matrix build_psi_tilde(const Ring& ring, int r);
/// 2r x 2r block diagonal of [[0, -bar(1)^-1], [1, 0]]; inverse of psi_tilde.
Matrix build_psi_tilde_prime(const Ring& ring, int r);

Matrix build_Psi(const SpaceConfig& cfg);
Matrix build_Psi_inv(const SpaceConfig& cfg);

/// The bordering data of Psi = [[0, c], [-bar(1) c^t, mu]] and its inverse.
struct SpaceBlocks {
    Matrix c;   // 1 x (dim-1): (1, 0, ..., 0)
    Matrix d;   // 1 x (dim-1): (-bar(1)^-1, 0, ..., 0)
    Matrix mu;  // trailing submatrix of Psi
    Matrix rho; // trailing submatrix of Psi^-1
};
SpaceBlocks blocks(const SpaceConfig& cfg);

/// <u, v> = bar(1)^-1 * (entrywise-bar u)^t * Psi * v, in HyperbolicFirst
/// coordinates. On basis vectors this is exactly Psi_ij.
Scalar inner(const SpaceConfig& cfg, const std::vector<Scalar>& u, const std::vector<Scalar>& v);

HeisElem heis_add(const SpaceConfig& cfg, const HeisElem& x, const HeisElem& y);
HeisElem heis_neg(const SpaceConfig& cfg, const HeisElem& x);
/// Right action (u, r) <- s = (u s, bar(s) bar(1)^-1 r s).
HeisElem heis_act(const SpaceConfig& cfg, const HeisElem& x, const Scalar& s);
/// tr((u, r)) = r - bar(r) - <u, u>.
Scalar heis_trace(const SpaceConfig& cfg, const HeisElem& x);

bool in_L_max(const SpaceConfig& cfg, const HeisElem& x);
bool in_L_min(const SpaceConfig& cfg, const HeisElem& x);
/// (0, r) in L_max, i.e. r = bar(r).
bool in_L_ev(const SpaceConfig& cfg, const Scalar& r);

/// Verifies Psi = -bar_transpose(Psi) and, on random vector pairs,
/// <u, v> = -bar(<v, u>); the two criteria must agree.
Report anti_hermitian_check(const SpaceConfig& cfg, int pair_samples = 32,
                            std::uint64_t seed = 0x5eed);

/// Inner square restricted to the complement of the first hyperbolic pair:
/// bar(1)^-1 * (bar w) * (psi_tilde_{m-1} perp phi) * w^t, |w| = dim - 2.
Scalar q_small(const SpaceConfig& cfg, const std::vector<Scalar>& w);

/// P = [[0_{2m x n}, I_2m], [I_n, 0_{n x 2m}]]; x_hyp = P * x_mod,
/// M_mod = P^t * M_hyp * P. Satisfies P^-1 = P^t.
Matrix build_P(const SpaceConfig& cfg);

std::vector<Scalar> to_hyperbolic(const SpaceConfig& cfg, const std::vector<Scalar>& x_mod);
std::vector<Scalar> to_module_first(const SpaceConfig& cfg, const std::vector<Scalar>& x_hyp);
Matrix conjugate_to_module_first(const SpaceConfig& cfg, const Matrix& m_hyp);
Matrix conjugate_to_hyperbolic(const SpaceConfig& cfg, const Matrix& m_mod);

std::vector<Scalar> basis_vector(const SpaceConfig& cfg, int idx);
std::vector<Scalar> zero_vector(const SpaceConfig& cfg);
std::vector<Scalar> sample_vector(const SpaceConfig& cfg, SeededRng& rng);

std::vector<Scalar> vec_add(const Ring& ring, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b);
std::vector<Scalar> vec_sub(const Ring& ring, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b);
std::vector<Scalar> vec_scale(const Ring& ring, const std::vector<Scalar>& a, const Scalar& s);

} // namespace oddu
