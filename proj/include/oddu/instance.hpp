#pragma once

#include <optional>

#include "oddu/json_io.hpp"

namespace oddu {

/// A self-contained problem instance: space data plus (optionally) a border
/// vector and the seed it was drawn with.
struct InstanceFile {
    SpaceConfig cfg;
    std::optional<VVector> v;
    std::optional<std::uint64_t> seed;
};

json instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const json& j);

enum class StandardPhi { Identity, SkewStandard };

/// The two built-in V0 forms: phi = I_n (valid over negation-involution
/// rings) and the standard skew form diag([[0,1],[-1,0]], ...) for even n.
/// Returns (phi, phi_inv). Throws InvalidPhi for odd n with SkewStandard.
std::pair<Matrix, Matrix> standard_phi(const Ring& ring, int n, StandardPhi kind);

/// Uniform border vector with the given seed.
VVector sample_vvector(const SpaceConfig& cfg, std::uint64_t seed);

/// Solve condition (D) for a_1 given the tail w = (a_2, ..., a_{n+2m-1}):
/// bar(a_1) - a_1 = q_small(w). Empty when the per-ring closed form has no
/// solution.
std::optional<Scalar> force_D_a1(const SpaceConfig& cfg, const std::vector<Scalar>& w);

enum class CheckSet { All, Isometry, Congruence, Conditions, Factorization, Conjugation };

/// The oracle battery behind `verify`. Conditional checks assert the theorem
/// implications ((D) for L(v), (E) for L(v)*); the unconditional ones assert
/// the factorization and conjugation identities for the given v.
Report run_instance_checks(const SpaceConfig& cfg, const VVector& v, CheckSet set);

/// Space-level sanity: phi inverse pair, anti-Hermitian criterion,
/// Psi * Psi_inv = I, and the two zero-product lemmas.
Report run_space_checks(const SpaceConfig& cfg);

} // namespace oddu
