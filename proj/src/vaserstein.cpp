#include "oddu/vaserstein.hpp"

namespace oddu {

namespace {

void require_vvector(const SpaceConfig& cfg, const VVector& v) {
    if (static_cast<int>(v.a.size()) != cfg.dim() - 1)
        throw DimensionMismatch("VVector: expected length " + std::to_string(cfg.dim() - 1) +
                                ", got " + std::to_string(v.a.size()));
}

// 0-based ModuleFirst slots (the layout of the T_{+-1} matrices).
int mf_v(int k) { return k - 1; }
int mf_e(const SpaceConfig& cfg, int i) {
    int j = i > 0 ? i : -i;
    return cfg.n() + 2 * (j - 1) + (i > 0 ? 0 : 1);
}

// Row (bar v) mu.
std::vector<Scalar> vbar_mu(const SpaceConfig& cfg, const VVector& v, const Matrix& mu) {
    const Ring& ring = cfg.ring();
    int k = cfg.dim() - 1;
    std::vector<Scalar> y(static_cast<std::size_t>(k), ring.zero());
    for (int j = 0; j < k; ++j) {
        Scalar acc = ring.zero();
        for (int i = 0; i < k; ++i)
            acc = ring.add(acc, ring.mul(ring.bar(v.a[static_cast<std::size_t>(i)]), mu.at(i, j)));
        y[static_cast<std::size_t>(j)] = acc;
    }
    return y;
}

// Column rho (bar v)^t.
std::vector<Scalar> rho_vbar(const SpaceConfig& cfg, const VVector& v, const Matrix& rho) {
    const Ring& ring = cfg.ring();
    int k = cfg.dim() - 1;
    std::vector<Scalar> z(static_cast<std::size_t>(k), ring.zero());
    for (int i = 0; i < k; ++i) {
        Scalar acc = ring.zero();
        for (int j = 0; j < k; ++j)
            acc = ring.add(acc, ring.mul(rho.at(i, j), ring.bar(v.a[static_cast<std::size_t>(j)])));
        z[static_cast<std::size_t>(i)] = acc;
    }
    return z;
}

} // namespace

Matrix build_alpha(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    SpaceBlocks bl = blocks(cfg);
    std::vector<Scalar> y = vbar_mu(cfg, v, bl.mu);
    int k = cfg.dim() - 1;
    Matrix out = Matrix::identity(ring, k);
    for (int i = 0; i < k; ++i) {
        if (bl.d.at(0, i).is_zero()) continue;
        for (int j = 0; j < k; ++j)
            out.set(i, j, ring.add(out.at(i, j), ring.mul(bl.d.at(0, i), y[static_cast<std::size_t>(j)])));
    }
    return out;
}

Matrix build_beta(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    SpaceBlocks bl = blocks(cfg);
    std::vector<Scalar> z = rho_vbar(cfg, v, bl.rho);
    Scalar inv1 = special_units(ring).second;
    int k = cfg.dim() - 1;
    Matrix out = Matrix::identity(ring, k);
    for (int i = 0; i < k; ++i) {
        if (z[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < k; ++j) {
            Scalar delta = ring.mul(ring.mul(inv1, z[static_cast<std::size_t>(i)]), bl.c.at(0, j));
            out.set(i, j, ring.sub(out.at(i, j), delta));
        }
    }
    return out;
}

Matrix build_L(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    Matrix alpha = build_alpha(cfg, v);
    Matrix out(ring, cfg.dim(), cfg.dim());
    out.set(0, 0, ring.one());
    for (int i = 1; i < cfg.dim(); ++i) {
        out.set(i, 0, v.a[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j < cfg.dim(); ++j) out.set(i, j, alpha.at(i - 1, j - 1));
    }
    return out;
}

Matrix build_L_star(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    Matrix beta = build_beta(cfg, v);
    Matrix out(ring, cfg.dim(), cfg.dim());
    out.set(0, 0, ring.one());
    for (int j = 1; j < cfg.dim(); ++j) {
        out.set(0, j, v.a[static_cast<std::size_t>(j - 1)]);
        for (int i = 1; i < cfg.dim(); ++i) out.set(i, j, beta.at(i - 1, j - 1));
    }
    for (int i = 1; i < cfg.dim(); ++i) out.set(i, 0, ring.zero());
    return out;
}

bool condition_D(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    std::vector<Scalar> w(v.a.begin() + 1, v.a.end());
    Scalar lhs = ring.sub(ring.bar(v.a[0]), v.a[0]);
    return lhs == q_small(cfg, w);
}

bool condition_E(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    Scalar bar1 = ring.bar_one();
    Scalar inv1 = special_units(ring).second;
    Scalar lhs = ring.sub(ring.bar(ring.mul(bar1, v.a[0])), ring.mul(bar1, v.a[0]));

    Matrix gram = block_diag(build_psi_tilde_prime(ring, cfg.m() - 1),
                             scalar_mul(ring.mul(inv1, inv1), cfg.phi()));
    std::vector<Scalar> w(v.a.begin() + 1, v.a.end());
    Scalar rhs = ring.zero(); // (bar w) gram^t w^t
    for (int j = 0; j < gram.rows(); ++j) {
        if (w[static_cast<std::size_t>(j)].is_zero()) continue;
        Scalar wbar = ring.bar(w[static_cast<std::size_t>(j)]);
        for (int k = 0; k < gram.cols(); ++k)
            rhs = ring.add(rhs, ring.mul(ring.mul(wbar, gram.at(k, j)), w[static_cast<std::size_t>(k)]));
    }
    return lhs == rhs;
}

ElementaryWord factor_L(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    SpaceBlocks bl = blocks(cfg);
    int k = cfg.dim() - 1;

    std::vector<Scalar> y = vbar_mu(cfg, v, bl.mu);
    Scalar pivot = ring.zero(); // (bar v) mu d^t
    for (int j = 0; j < k; ++j)
        pivot = ring.add(pivot, ring.mul(y[static_cast<std::size_t>(j)], bl.d.at(0, j)));
    if (!pivot.is_zero())
        throw InternalInvariantViolation("(bar v) mu d^t != 0; corrupted space config");

    ElementaryWord w{ring, cfg.dim(), {}};
    auto col = [&](const std::vector<Scalar>& vals, bool negate) {
        for (int j = 0; j < k; ++j) {
            Scalar r = negate ? ring.neg(vals[static_cast<std::size_t>(j)])
                              : vals[static_cast<std::size_t>(j)];
            if (!r.is_zero()) w.factors.push_back({j + 2, 1, r});
        }
    };
    auto row = [&](const std::vector<Scalar>& vals, bool negate) {
        for (int j = 0; j < k; ++j) {
            Scalar r = negate ? ring.neg(vals[static_cast<std::size_t>(j)])
                              : vals[static_cast<std::size_t>(j)];
            if (!r.is_zero()) w.factors.push_back({1, j + 2, r});
        }
    };

    std::vector<Scalar> d_row(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) d_row[static_cast<std::size_t>(j)] = bl.d.at(0, j);
    std::vector<Scalar> y_neg(static_cast<std::size_t>(k));
    bool alpha_trivial = true;
    for (int j = 0; j < k; ++j) {
        y_neg[static_cast<std::size_t>(j)] = ring.neg(y[static_cast<std::size_t>(j)]);
        alpha_trivial = alpha_trivial && y[static_cast<std::size_t>(j)].is_zero();
    }

    col(v.a, false); // [[1,0],[v^t,I]]
    if (!alpha_trivial) {
        row(y_neg, false); // A   = [[1, -vbar.mu], [0, I]]
        col(d_row, false); // B   = [[1, 0], [d^t, I]]
        row(y_neg, true);  // A^-1
        col(d_row, true);  // B^-1
    }
    return w;
}

ElementaryWord factor_L_star(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    SpaceBlocks bl = blocks(cfg);
    int k = cfg.dim() - 1;

    for (int j = 0; j < k; ++j) { // c rho = 0, row identity
        Scalar acc = ring.zero();
        for (int i = 0; i < k; ++i)
            acc = ring.add(acc, ring.mul(bl.c.at(0, i), bl.rho.at(i, j)));
        if (!acc.is_zero())
            throw InternalInvariantViolation("c rho != 0; corrupted space config");
    }

    Scalar inv1 = special_units(ring).second;
    std::vector<Scalar> z = rho_vbar(cfg, v, bl.rho);
    std::vector<Scalar> w_col(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w_col[static_cast<std::size_t>(i)] = ring.mul(inv1, z[static_cast<std::size_t>(i)]);
    std::vector<Scalar> c_row(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) c_row[static_cast<std::size_t>(j)] = bl.c.at(0, j);

    ElementaryWord w{ring, cfg.dim(), {}};
    auto col = [&](const std::vector<Scalar>& vals, bool negate) {
        for (int j = 0; j < k; ++j) {
            Scalar r = negate ? ring.neg(vals[static_cast<std::size_t>(j)])
                              : vals[static_cast<std::size_t>(j)];
            if (!r.is_zero()) w.factors.push_back({j + 2, 1, r});
        }
    };
    auto row = [&](const std::vector<Scalar>& vals, bool negate) {
        for (int j = 0; j < k; ++j) {
            Scalar r = negate ? ring.neg(vals[static_cast<std::size_t>(j)])
                              : vals[static_cast<std::size_t>(j)];
            if (!r.is_zero()) w.factors.push_back({1, j + 2, r});
        }
    };

    // diag(1, beta) = B' A' B'^-1 A'^-1 with A' = [[1,0],[w,I]], B' = [[1,c],[0,I]],
    // w = bar(1)^-1 rho (bar v)^t; then the border [[1, v], [0, I]].
    bool beta_trivial = true;
    for (int i = 0; i < k; ++i)
        beta_trivial = beta_trivial && w_col[static_cast<std::size_t>(i)].is_zero();
    if (!beta_trivial) {
        row(c_row, false);
        col(w_col, false);
        row(c_row, true);
        col(w_col, true);
    }
    row(v.a, false);
    return w;
}

ConjugationResult conj_L_to_transvection(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    int m = cfg.m(), n = cfg.n();

    std::vector<Scalar> u(static_cast<std::size_t>(cfg.dim()), ring.zero());
    for (int k = 1; k <= n; ++k)
        u[static_cast<std::size_t>(mf_v(k))] = ring.neg(v.a[static_cast<std::size_t>(2 * m - 2 + k)]);
    for (int j = 2; j <= m; ++j) {
        u[static_cast<std::size_t>(mf_e(cfg, j))] = ring.neg(v.a[static_cast<std::size_t>(2 * j - 3)]);
        u[static_cast<std::size_t>(mf_e(cfg, -j))] = ring.neg(v.a[static_cast<std::size_t>(2 * j - 2)]);
    }

    // Witness: the (v, r) slot of T_-1(u, a) = T_{e_-1, u bar(1)^-1}(-a).
    Scalar inv1 = special_units(ring).second;
    HeisElem witness{vec_scale(ring, to_hyperbolic(cfg, u), inv1), ring.neg(v.a[0])};
    return ConjugationResult{TransvKind::TMinus1, std::move(u), v.a[0], std::move(witness)};
}

ConjugationResult conj_Lstar_to_transvection(const SpaceConfig& cfg, const VVector& v) {
    require_vvector(cfg, v);
    const Ring& ring = cfg.ring();
    int m = cfg.m(), n = cfg.n();
    Scalar bar1 = ring.bar_one();
    Scalar inv1 = special_units(ring).second;
    Scalar inv1_sq = ring.mul(inv1, inv1);

    std::vector<Scalar> u(static_cast<std::size_t>(cfg.dim()), ring.zero());
    for (int k = 1; k <= n; ++k) {
        Scalar acc = ring.zero();
        for (int j = 1; j <= n; ++j)
            acc = ring.add(acc, ring.mul(cfg.phi_inv().at(k - 1, j - 1),
                                         ring.bar(v.a[static_cast<std::size_t>(2 * m - 2 + j)])));
        u[static_cast<std::size_t>(mf_v(k))] = ring.mul(inv1, acc);
    }
    for (int j = 2; j <= m; ++j) {
        u[static_cast<std::size_t>(mf_e(cfg, j))] =
            ring.neg(ring.mul(inv1_sq, ring.bar(v.a[static_cast<std::size_t>(2 * j - 2)])));
        u[static_cast<std::size_t>(mf_e(cfg, -j))] =
            ring.mul(inv1, ring.bar(v.a[static_cast<std::size_t>(2 * j - 3)]));
    }

    // Witness: the (v, r) slot of T_1(u, a) = T_{e_1, -u}(-a) with a = -bar(1) a_1.
    std::vector<Scalar> minus_u_h =
        vec_scale(ring, to_hyperbolic(cfg, u), ring.neg(ring.one()));
    HeisElem witness{std::move(minus_u_h), ring.mul(bar1, v.a[0])};
    return ConjugationResult{TransvKind::TPlus1, std::move(u), ring.neg(ring.mul(bar1, v.a[0])),
                             std::move(witness)};
}

Matrix matrix_of(const SpaceConfig& cfg, const ConjugationResult& res) {
    return res.kind == TransvKind::TMinus1 ? t_minus1(cfg, res.u, res.a)
                                           : t_plus1(cfg, res.u, res.a);
}

VVector transvection_to_vaserstein(const SpaceConfig& cfg, TransvKind kind,
                                   const std::vector<Scalar>& u, const Scalar& a) {
    if (static_cast<int>(u.size()) != cfg.dim())
        throw DimensionMismatch("transvection_to_vaserstein: bad vector length");
    const Ring& ring = cfg.ring();
    int m = cfg.m(), n = cfg.n();
    if (!u[static_cast<std::size_t>(mf_e(cfg, 1))].is_zero() ||
        !u[static_cast<std::size_t>(mf_e(cfg, -1))].is_zero())
        throw BadCoordinate("u must have zero e_1 and e_-1 coordinates");
    if (!in_L_max(cfg, HeisElem{to_hyperbolic(cfg, u), a}))
        throw InvalidFormParameter("(u, a) must lie in L_max");

    VVector out;
    out.a.assign(static_cast<std::size_t>(cfg.dim() - 1), ring.zero());

    if (kind == TransvKind::TMinus1) {
        out.a[0] = ring.normalize(a);
        for (int j = 2; j <= m; ++j) {
            out.a[static_cast<std::size_t>(2 * j - 3)] =
                ring.neg(u[static_cast<std::size_t>(mf_e(cfg, j))]);
            out.a[static_cast<std::size_t>(2 * j - 2)] =
                ring.neg(u[static_cast<std::size_t>(mf_e(cfg, -j))]);
        }
        for (int k = 1; k <= n; ++k)
            out.a[static_cast<std::size_t>(2 * m - 2 + k)] =
                ring.neg(u[static_cast<std::size_t>(mf_v(k))]);
        return out;
    }

    Scalar inv1 = special_units(ring).second;
    Scalar inv1_sq = ring.mul(inv1, inv1);
    out.a[0] = ring.neg(ring.mul(inv1, a));
    for (int j = 2; j <= m; ++j) {
        out.a[static_cast<std::size_t>(2 * j - 3)] =
            ring.mul(inv1, ring.bar(u[static_cast<std::size_t>(mf_e(cfg, -j))]));
        out.a[static_cast<std::size_t>(2 * j - 2)] =
            ring.neg(ring.mul(inv1_sq, ring.bar(u[static_cast<std::size_t>(mf_e(cfg, j))])));
    }
    // phi part: a_phi = (bar(1)^-1)^2 (entrywise-bar phi) (entrywise-bar t);
    // the bar on the phi entries is forced by the round trip with the
    // forward conjugation.
    for (int k = 1; k <= n; ++k) {
        Scalar acc = ring.zero();
        for (int j = 1; j <= n; ++j)
            acc = ring.add(acc, ring.mul(ring.bar(cfg.phi().at(k - 1, j - 1)),
                                         ring.bar(u[static_cast<std::size_t>(mf_v(j))])));
        out.a[static_cast<std::size_t>(2 * m - 2 + k)] = ring.mul(inv1_sq, acc);
    }
    return out;
}

} // namespace oddu
