#pragma once

// Shared fixtures for the test suites: the standard ring instances, space
// builders with a compatible phi per involution, and the independent
// brute-force oracles the derived expectations are frozen against.

#include <optional>
#include <vector>

#include "oddu/instance.hpp"

namespace fixtures {

using namespace oddu;

inline Ring z_negation() { return make_ring(Family::Integer, Involution::Negation); }
inline Ring z_identity() { return make_ring(Family::Integer, Involution::Identity); }
inline Ring mod5_negation() { return make_ring(Family::Mod, Involution::Negation, 5); }
inline Ring mod3_negation() { return make_ring(Family::Mod, Involution::Negation, 3); }
inline Ring mod7_identity() { return make_ring(Family::Mod, Involution::Identity, 7); }
inline Ring gauss_twist() { return make_ring(Family::GaussInteger, Involution::TwistI); }
inline Ring gaussmod3_twist() { return make_ring(Family::GaussMod, Involution::TwistI, 3); }
inline Ring gaussmod5_negation() { return make_ring(Family::GaussMod, Involution::Negation, 5); }

/// All shipped ring instances (every family and involution is represented).
inline std::vector<Ring> standard_rings() {
    return {z_negation(),  z_identity(),      mod5_negation(),      mod7_identity(),
            gauss_twist(), gaussmod3_twist(), gaussmod5_negation()};
}

/// A valid (invertible, anti-Hermitian) phi of rank n for the ring's
/// involution, or nullopt when none of the built-in shapes applies:
///  - negation: I_n (symmetric)
///  - identity: standard skew blocks (even n only)
///  - twist_i:  blocks [[0,-i],[1,0]] plus a diagonal 1-i for odd n
///    (odd n needs 1-i invertible, so finite Gaussian rings only).
inline std::optional<std::pair<Matrix, Matrix>> compatible_phi(const Ring& ring, int n) {
    if (n == 0) {
        Matrix empty(ring, 0, 0);
        return std::make_pair(empty, empty);
    }
    switch (ring.involution()) {
        case Involution::Negation:
            return standard_phi(ring, n, StandardPhi::Identity);
        case Involution::Identity:
            if (n % 2 != 0) return std::nullopt;
            return standard_phi(ring, n, StandardPhi::SkewStandard);
        case Involution::TwistI: {
            Matrix phi(ring, n, n);
            Matrix inv(ring, n, n);
            Scalar i = ring.make(0, 1);
            int pairs = n / 2;
            for (int b = 0; b < pairs; ++b) {
                phi.set(2 * b, 2 * b + 1, ring.neg(i)); // [[0,-i],[1,0]]
                phi.set(2 * b + 1, 2 * b, ring.one());
                inv.set(2 * b, 2 * b + 1, ring.one()); // [[0,1],[i,0]]
                inv.set(2 * b + 1, 2 * b, i);
            }
            if (n % 2 != 0) {
                Scalar d = ring.make(1, -1);
                auto dinv = ring.try_inverse(d);
                if (!dinv) return std::nullopt;
                phi.set(n - 1, n - 1, d);
                inv.set(n - 1, n - 1, *dinv);
            }
            return std::make_pair(phi, inv);
        }
    }
    return std::nullopt;
}

inline std::optional<SpaceConfig> make_space(const Ring& ring, int m, int n) {
    auto phi = compatible_phi(ring, n);
    if (!phi) return std::nullopt;
    return SpaceConfig::make(ring, m, n, phi->first, phi->second);
}

/// The worked demo space: Z/5 with negation, m = 1, n = 2, phi = I.
inline SpaceConfig demo_space() { return *make_space(mod5_negation(), 1, 2); }

inline VVector demo_v(const Ring& ring) {
    return VVector{{ring.from_int(0), ring.from_int(1), ring.from_int(2)}};
}

/// Enumerate all coordinate vectors of the given length over a finite ring.
inline std::vector<std::vector<Scalar>> all_vectors(const Ring& ring, int len) {
    Int size = ring.carrier_size();
    std::vector<std::vector<Scalar>> out;
    std::vector<Int> idx(static_cast<std::size_t>(len), Int(0));
    while (true) {
        std::vector<Scalar> v;
        v.reserve(static_cast<std::size_t>(len));
        for (const auto& i : idx) v.push_back(ring.element_at(i));
        out.push_back(std::move(v));
        int pos = 0;
        while (pos < len) {
            idx[static_cast<std::size_t>(pos)] += 1;
            if (idx[static_cast<std::size_t>(pos)] < size) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == len) break;
    }
    return out;
}

/// Independent congruence oracle: evaluate the defect trace on EVERY vector
/// of a finite space, using only the space-level primitives.
inline bool congruent_brute_force(const SpaceConfig& cfg, const Matrix& m) {
    const Ring& ring = cfg.ring();
    for (const auto& x : all_vectors(ring, cfg.dim())) {
        std::vector<Scalar> mx = mat_vec(m, x);
        std::vector<Scalar> u = vec_sub(ring, mx, x);
        Scalar a = inner(cfg, vec_sub(ring, x, mx), x);
        if (!heis_trace(cfg, HeisElem{u, a}).is_zero()) return false;
    }
    return true;
}

/// Random (u, a) in L_max with zero e_1, e_-1 coordinates, u in ModuleFirst
/// order. Resamples until the per-ring solver for a - bar(a) = <u,u> hits.
inline std::pair<std::vector<Scalar>, Scalar> sample_Lmax_pair(const SpaceConfig& cfg,
                                                               SeededRng& rng) {
    const Ring& ring = cfg.ring();
    for (;;) {
        std::vector<Scalar> u(static_cast<std::size_t>(cfg.dim()), ring.zero());
        for (int k = 0; k < cfg.n(); ++k) u[static_cast<std::size_t>(k)] = ring.sample(rng);
        for (int s = cfg.n() + 2; s < cfg.dim(); ++s) u[static_cast<std::size_t>(s)] = ring.sample(rng);
        std::vector<Scalar> u_h = to_hyperbolic(cfg, u);
        Scalar g = inner(cfg, u_h, u_h);
        // a - bar(a) = g  <=>  bar(a) - a = -g
        auto a = ring.solve_bar_minus(ring.neg(g));
        if (a) return {std::move(u), *a};
    }
}

/// Random validated ESD triple (HyperbolicFirst coordinates): u isotropic,
/// <u, v> = 0, (v, r) in L_max.
inline std::tuple<std::vector<Scalar>, std::vector<Scalar>, Scalar> sample_esd_triple(
    const SpaceConfig& cfg, SeededRng& rng) {
    const Ring& ring = cfg.ring();
    for (;;) {
        // u = e_i s + e_j t with i != -j is always isotropic.
        int m = cfg.m();
        int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
        if (rng.below(2)) i = -i;
        std::vector<Scalar> u = vec_scale(ring, basis_vector(cfg, hyperbolic_slot(cfg, i)),
                                          ring.sample(rng));
        if (m > 1) {
            int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            if (rng.below(2)) j = -j;
            if (j != -i && j != i)
                u = vec_add(ring, u,
                            vec_scale(ring, basis_vector(cfg, hyperbolic_slot(cfg, j)),
                                      ring.sample(rng)));
        }
        if (!inner(cfg, u, u).is_zero()) continue;

        std::vector<Scalar> v = sample_vector(cfg, rng);
        if (!inner(cfg, u, v).is_zero()) continue;

        Scalar g = inner(cfg, v, v);
        auto r = ring.solve_bar_minus(ring.neg(g)); // r - bar(r) = <v,v>
        if (!r) continue;
        return {std::move(u), std::move(v), *r};
    }
}

} // namespace fixtures
