#include "oddu/space.hpp"

namespace oddu {

namespace {

void require_length(const SpaceConfig& cfg, const std::vector<Scalar>& v, const char* what) {
    if (static_cast<int>(v.size()) != cfg.dim())
        throw DimensionMismatch(std::string(what) + ": expected length " +
                                std::to_string(cfg.dim()) + ", got " + std::to_string(v.size()));
}

} // namespace

SpaceConfig SpaceConfig::make(Ring ring, int m, int n, Matrix phi, Matrix phi_inv) {
    if (m < 1) throw Error("hyperbolic rank m must be >= 1");
    if (n < 0) throw Error("module rank n must be >= 0");
    if (phi.rows() != n || phi.cols() != n || phi_inv.rows() != n || phi_inv.cols() != n)
        throw DimensionMismatch("phi must be n x n");
    if (phi.ring() != ring || phi_inv.ring() != ring)
        throw RingMismatch("phi ring differs from the space ring");
    Matrix id = Matrix::identity(ring, n);
    if (phi * phi_inv != id || phi_inv * phi != id)
        throw InvalidPhi("phi * phi_inv != I");
    Matrix psi = block_diag(build_psi_tilde(ring, m), phi);
    Matrix psi_inv = block_diag(build_psi_tilde_prime(ring, m), phi_inv);
    return SpaceConfig(std::move(ring), m, n, std::move(phi), std::move(phi_inv), std::move(psi),
                       std::move(psi_inv));
}

Matrix build_psi_tilde(const Ring& ring, int r) {
    if (r < 0) throw Error("psi_tilde rank must be >= 0");
    Matrix out(ring, 2 * r, 2 * r);
    Scalar minus_bar_one = ring.neg(ring.bar_one());
    for (int b = 0; b < r; ++b) {
        out.set(2 * b, 2 * b + 1, ring.one());
        out.set(2 * b + 1, 2 * b, minus_bar_one);
    }
    return out;
}

Matrix build_psi_tilde_prime(const Ring& ring, int r) {
    if (r < 0) throw Error("psi_tilde rank must be >= 0");
    Matrix out(ring, 2 * r, 2 * r);
    Scalar minus_bar_one_inv = ring.neg(special_units(ring).second);
    for (int b = 0; b < r; ++b) {
        out.set(2 * b, 2 * b + 1, minus_bar_one_inv);
        out.set(2 * b + 1, 2 * b, ring.one());
    }
    return out;
}

Matrix build_Psi(const SpaceConfig& cfg) { return cfg.psi(); }

Matrix build_Psi_inv(const SpaceConfig& cfg) { return cfg.psi_inv(); }

SpaceBlocks blocks(const SpaceConfig& cfg) {
    const Ring& ring = cfg.ring();
    int k = cfg.dim() - 1;
    Matrix c(ring, 1, k);
    Matrix d(ring, 1, k);
    for (int j = 0; j < k; ++j) {
        c.set(0, j, cfg.psi().at(0, j + 1));
        d.set(0, j, cfg.psi_inv().at(0, j + 1));
    }
    return SpaceBlocks{std::move(c), std::move(d), trailing_submatrix(cfg.psi(), 1),
                       trailing_submatrix(cfg.psi_inv(), 1)};
}

Scalar inner(const SpaceConfig& cfg, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    require_length(cfg, u, "inner");
    require_length(cfg, v, "inner");
    const Ring& ring = cfg.ring();
    const Matrix& psi = cfg.psi();
    Scalar acc = ring.zero();
    for (int i = 0; i < cfg.dim(); ++i) {
        if (u[static_cast<std::size_t>(i)].is_zero()) continue;
        Scalar ubar = ring.bar(u[static_cast<std::size_t>(i)]);
        for (int j = 0; j < cfg.dim(); ++j)
            acc = ring.add(acc, ring.mul(ring.mul(ubar, psi.at(i, j)), v[static_cast<std::size_t>(j)]));
    }
    return ring.mul(special_units(ring).second, acc);
}

HeisElem heis_add(const SpaceConfig& cfg, const HeisElem& x, const HeisElem& y) {
    require_length(cfg, x.u, "heis_add");
    require_length(cfg, y.u, "heis_add");
    const Ring& ring = cfg.ring();
    return HeisElem{vec_add(ring, x.u, y.u),
                    ring.add(ring.add(x.r, y.r), inner(cfg, x.u, y.u))};
}

HeisElem heis_neg(const SpaceConfig& cfg, const HeisElem& x) {
    require_length(cfg, x.u, "heis_neg");
    const Ring& ring = cfg.ring();
    std::vector<Scalar> nu = vec_scale(ring, x.u, ring.neg(ring.one()));
    return HeisElem{std::move(nu), ring.add(ring.neg(x.r), inner(cfg, x.u, x.u))};
}

HeisElem heis_act(const SpaceConfig& cfg, const HeisElem& x, const Scalar& s) {
    require_length(cfg, x.u, "heis_act");
    const Ring& ring = cfg.ring();
    Scalar r = ring.mul(ring.mul(ring.mul(ring.bar(s), special_units(ring).second), x.r), s);
    return HeisElem{vec_scale(ring, x.u, s), r};
}

Scalar heis_trace(const SpaceConfig& cfg, const HeisElem& x) {
    require_length(cfg, x.u, "heis_trace");
    const Ring& ring = cfg.ring();
    return ring.sub(ring.sub(x.r, ring.bar(x.r)), inner(cfg, x.u, x.u));
}

bool in_L_max(const SpaceConfig& cfg, const HeisElem& x) {
    return heis_trace(cfg, x).is_zero();
}

bool in_L_min(const SpaceConfig& cfg, const HeisElem& x) {
    require_length(cfg, x.u, "in_L_min");
    for (const auto& s : x.u)
        if (!s.is_zero()) return false;
    return cfg.ring().exists_r_plus_rbar(x.r);
}

bool in_L_ev(const SpaceConfig& cfg, const Scalar& r) {
    const Ring& ring = cfg.ring();
    return ring.bar(r) == ring.normalize(r);
}

Report anti_hermitian_check(const SpaceConfig& cfg, int pair_samples, std::uint64_t seed) {
    Report rep;
    const Ring& ring = cfg.ring();
    bool matrix_ok = cfg.psi() == neg(bar_transpose(cfg.psi()));
    rep.add("Psi = -bar_transpose(Psi)", matrix_ok);

    SeededRng rng(seed);
    bool vec_ok = true;
    std::string witness;
    for (int t = 0; t < pair_samples && vec_ok; ++t) {
        std::vector<Scalar> u = sample_vector(cfg, rng);
        std::vector<Scalar> v = sample_vector(cfg, rng);
        Scalar lhs = inner(cfg, u, v);
        Scalar rhs = ring.neg(ring.bar(inner(cfg, v, u)));
        if (lhs != rhs) {
            vec_ok = false;
            witness = "<u,v>=" + print_scalar(lhs) + " vs -bar(<v,u>)=" + print_scalar(rhs);
        }
    }
    rep.add("<u,v> = -bar(<v,u>) on samples", vec_ok, witness);
    rep.add("criteria agree", matrix_ok == vec_ok);
    return rep;
}

Scalar q_small(const SpaceConfig& cfg, const std::vector<Scalar>& w) {
    if (static_cast<int>(w.size()) != cfg.dim() - 2)
        throw DimensionMismatch("q_small: expected length " + std::to_string(cfg.dim() - 2));
    const Ring& ring = cfg.ring();
    Matrix gram = block_diag(build_psi_tilde(ring, cfg.m() - 1), cfg.phi());
    Scalar acc = ring.zero();
    for (int i = 0; i < gram.rows(); ++i) {
        if (w[static_cast<std::size_t>(i)].is_zero()) continue;
        Scalar wbar = ring.bar(w[static_cast<std::size_t>(i)]);
        for (int j = 0; j < gram.cols(); ++j)
            acc = ring.add(acc, ring.mul(ring.mul(wbar, gram.at(i, j)), w[static_cast<std::size_t>(j)]));
    }
    return ring.mul(special_units(ring).second, acc);
}

Matrix build_P(const SpaceConfig& cfg) {
    const Ring& ring = cfg.ring();
    int n = cfg.n(), two_m = 2 * cfg.m();
    Matrix p(ring, n + two_m, n + two_m);
    for (int i = 0; i < two_m; ++i) p.set(i, n + i, ring.one());
    for (int i = 0; i < n; ++i) p.set(two_m + i, i, ring.one());
    return p;
}

std::vector<Scalar> to_hyperbolic(const SpaceConfig& cfg, const std::vector<Scalar>& x_mod) {
    require_length(cfg, x_mod, "to_hyperbolic");
    return mat_vec(build_P(cfg), x_mod);
}

std::vector<Scalar> to_module_first(const SpaceConfig& cfg, const std::vector<Scalar>& x_hyp) {
    require_length(cfg, x_hyp, "to_module_first");
    return mat_vec(transpose(build_P(cfg)), x_hyp);
}

Matrix conjugate_to_module_first(const SpaceConfig& cfg, const Matrix& m_hyp) {
    Matrix p = build_P(cfg);
    return transpose(p) * m_hyp * p;
}

Matrix conjugate_to_hyperbolic(const SpaceConfig& cfg, const Matrix& m_mod) {
    Matrix p = build_P(cfg);
    return p * m_mod * transpose(p);
}

std::vector<Scalar> basis_vector(const SpaceConfig& cfg, int idx) {
    if (idx < 0 || idx >= cfg.dim()) throw BadIndex("basis_vector " + std::to_string(idx));
    std::vector<Scalar> v(static_cast<std::size_t>(cfg.dim()));
    v[static_cast<std::size_t>(idx)] = cfg.ring().one();
    return v;
}

std::vector<Scalar> zero_vector(const SpaceConfig& cfg) {
    return std::vector<Scalar>(static_cast<std::size_t>(cfg.dim()));
}

std::vector<Scalar> sample_vector(const SpaceConfig& cfg, SeededRng& rng) {
    std::vector<Scalar> v(static_cast<std::size_t>(cfg.dim()));
    for (auto& s : v) s = cfg.ring().sample(rng);
    return v;
}

std::vector<Scalar> vec_add(const Ring& ring, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
    std::vector<Scalar> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
    return out;
}

std::vector<Scalar> vec_sub(const Ring& ring, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub: length mismatch");
    std::vector<Scalar> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
    return out;
}

std::vector<Scalar> vec_scale(const Ring& ring, const std::vector<Scalar>& a, const Scalar& s) {
    std::vector<Scalar> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(a[i], s);
    return out;
}

} // namespace oddu
