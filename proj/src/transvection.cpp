#include "oddu/transvection.hpp"

namespace oddu {

namespace {

// 0-based ModuleFirst slots.
int mf_v(int, int k) { return k - 1; }                    // v_k, 1 <= k <= n
int mf_e(const SpaceConfig& cfg, int i) {                 // e_i, i in {+-1..+-m}
    int j = i > 0 ? i : -i;
    return cfg.n() + 2 * (j - 1) + (i > 0 ? 0 : 1);
}

void check_root_index(const SpaceConfig& cfg, int i) {
    if (i == 0 || i > cfg.m() || i < -cfg.m())
        throw BadIndex("root index " + std::to_string(i) + " out of range for m=" +
                       std::to_string(cfg.m()));
}

Matrix esd_matrix_hyp(const SpaceConfig& cfg, const std::vector<Scalar>& u,
                      const std::vector<Scalar>& v, const Scalar& r) {
    const Ring& ring = cfg.ring();
    Scalar bar_one_inv = special_units(ring).second;
    Matrix out(ring, cfg.dim(), cfg.dim());
    for (int j = 0; j < cfg.dim(); ++j) {
        std::vector<Scalar> w = basis_vector(cfg, j);
        Scalar uw = inner(cfg, u, w);
        Scalar coeff_u = ring.mul(bar_one_inv, ring.add(inner(cfg, v, w), ring.mul(r, uw)));
        std::vector<Scalar> col =
            vec_add(ring, w, vec_add(ring, vec_scale(ring, u, coeff_u), vec_scale(ring, v, uw)));
        for (int i = 0; i < cfg.dim(); ++i) out.set(i, j, col[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace

Scalar epsilon(const Ring& ring, int i) {
    if (i == 0) throw BadIndex("epsilon(0) is undefined");
    if (i > 0) return special_units(ring).second;
    return ring.neg(ring.one());
}

int hyperbolic_slot(const SpaceConfig& cfg, int i) {
    check_root_index(cfg, i);
    int j = i > 0 ? i : -i;
    return 2 * (j - 1) + (i > 0 ? 0 : 1);
}

Matrix esd_matrix(const SpaceConfig& cfg, BasisOrder order, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v, const Scalar& r) {
    if (order == BasisOrder::HyperbolicFirst) return esd_matrix_hyp(cfg, u, v, r);
    Matrix m = esd_matrix_hyp(cfg, to_hyperbolic(cfg, u), to_hyperbolic(cfg, v), r);
    return conjugate_to_module_first(cfg, m);
}

bool esd_validate(const SpaceConfig& cfg, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v, const Scalar& r) {
    return inner(cfg, u, v).is_zero() && in_L_max(cfg, HeisElem{u, cfg.ring().zero()}) &&
           in_L_max(cfg, HeisElem{v, r});
}

Matrix t_plus1(const SpaceConfig& cfg, const std::vector<Scalar>& u, const Scalar& a) {
    if (static_cast<int>(u.size()) != cfg.dim())
        throw DimensionMismatch("t_plus1: bad vector length");
    const Ring& ring = cfg.ring();
    int n = cfg.n(), m = cfg.m();
    if (!u[static_cast<std::size_t>(mf_e(cfg, -1))].is_zero())
        throw BadCoordinate("t_plus1: e_-1 coordinate of u must vanish");

    Scalar inv1 = special_units(ring).second;
    Scalar inv1_sq = ring.mul(inv1, inv1);
    const Scalar& b1 = u[static_cast<std::size_t>(mf_e(cfg, 1))];
    int row_e1 = mf_e(cfg, 1), col_em1 = mf_e(cfg, -1);

    Matrix out = Matrix::identity(ring, cfg.dim());
    // columns v_k
    for (int k = 1; k <= n; ++k) {
        Scalar acc = ring.zero();
        for (int i = 1; i <= n; ++i)
            acc = ring.add(acc, ring.mul(ring.bar(u[static_cast<std::size_t>(mf_v(n, i))]),
                                         cfg.phi().at(i - 1, k - 1)));
        out.set(row_e1, mf_v(n, k), ring.neg(ring.mul(inv1_sq, acc)));
    }
    // column e_-1
    for (int k = 1; k <= n; ++k)
        out.set(mf_v(n, k), col_em1, ring.neg(u[static_cast<std::size_t>(mf_v(n, k))]));
    Scalar diag = ring.add(ring.add(ring.mul(ring.bar(b1), inv1_sq), ring.mul(a, inv1)), b1);
    out.set(row_e1, col_em1, ring.neg(diag));
    for (int j = 2; j <= m; ++j) {
        out.set(mf_e(cfg, j), col_em1, ring.neg(u[static_cast<std::size_t>(mf_e(cfg, j))]));
        out.set(mf_e(cfg, -j), col_em1, ring.neg(u[static_cast<std::size_t>(mf_e(cfg, -j))]));
    }
    // columns e_j, e_-j for j >= 2
    for (int j = 2; j <= m; ++j) {
        const Scalar& bj = u[static_cast<std::size_t>(mf_e(cfg, j))];
        const Scalar& bmj = u[static_cast<std::size_t>(mf_e(cfg, -j))];
        out.set(row_e1, mf_e(cfg, j), ring.mul(inv1, ring.bar(bmj)));
        out.set(row_e1, mf_e(cfg, -j), ring.neg(ring.mul(inv1_sq, ring.bar(bj))));
    }
    return out;
}

Matrix t_minus1(const SpaceConfig& cfg, const std::vector<Scalar>& u, const Scalar& a) {
    if (static_cast<int>(u.size()) != cfg.dim())
        throw DimensionMismatch("t_minus1: bad vector length");
    const Ring& ring = cfg.ring();
    int n = cfg.n(), m = cfg.m();
    if (!u[static_cast<std::size_t>(mf_e(cfg, 1))].is_zero())
        throw BadCoordinate("t_minus1: e_1 coordinate of u must vanish");

    Scalar inv1 = special_units(ring).second;
    const Scalar& bm1 = u[static_cast<std::size_t>(mf_e(cfg, -1))];
    int row_em1 = mf_e(cfg, -1), col_e1 = mf_e(cfg, 1);

    Matrix out = Matrix::identity(ring, cfg.dim());
    // columns v_k
    for (int k = 1; k <= n; ++k) {
        Scalar acc = ring.zero();
        for (int i = 1; i <= n; ++i)
            acc = ring.add(acc, ring.mul(ring.bar(u[static_cast<std::size_t>(mf_v(n, i))]),
                                         cfg.phi().at(i - 1, k - 1)));
        out.set(row_em1, mf_v(n, k), ring.mul(inv1, acc));
    }
    // column e_1; its e_-1 entry is -bar(b_-1) + a - b_-1
    for (int k = 1; k <= n; ++k)
        out.set(mf_v(n, k), col_e1, ring.neg(u[static_cast<std::size_t>(mf_v(n, k))]));
    out.set(row_em1, col_e1, ring.sub(ring.add(ring.neg(ring.bar(bm1)), a), bm1));
    for (int j = 2; j <= m; ++j) {
        out.set(mf_e(cfg, j), col_e1, ring.neg(u[static_cast<std::size_t>(mf_e(cfg, j))]));
        out.set(mf_e(cfg, -j), col_e1, ring.neg(u[static_cast<std::size_t>(mf_e(cfg, -j))]));
    }
    // columns e_j, e_-j for j >= 2
    for (int j = 2; j <= m; ++j) {
        const Scalar& bj = u[static_cast<std::size_t>(mf_e(cfg, j))];
        const Scalar& bmj = u[static_cast<std::size_t>(mf_e(cfg, -j))];
        out.set(row_em1, mf_e(cfg, j), ring.neg(ring.bar(bmj)));
        out.set(row_em1, mf_e(cfg, -j), ring.mul(inv1, ring.bar(bj)));
    }
    return out;
}

Matrix root_transvection(const SpaceConfig& cfg, const TransvectionSpec& spec) {
    const Ring& ring = cfg.ring();
    auto finish_hyp = [&](const Matrix& m_hyp) {
        return spec.order == BasisOrder::HyperbolicFirst ? m_hyp
                                                         : conjugate_to_module_first(cfg, m_hyp);
    };
    auto finish_mod = [&](const Matrix& m_mod) {
        return spec.order == BasisOrder::ModuleFirst ? m_mod : conjugate_to_hyperbolic(cfg, m_mod);
    };

    if (const auto* esd = std::get_if<EsdData>(&spec.data))
        return esd_matrix(cfg, spec.order, esd->u, esd->v, esd->r);

    if (const auto* sh = std::get_if<ShortData>(&spec.data)) {
        check_root_index(cfg, sh->i);
        check_root_index(cfg, sh->j);
        if (sh->i == sh->j) throw BadIndex("short root needs i != j");
        std::vector<Scalar> u = basis_vector(cfg, hyperbolic_slot(cfg, -sh->j));
        std::vector<Scalar> v = vec_scale(
            ring, basis_vector(cfg, hyperbolic_slot(cfg, sh->i)),
            ring.neg(ring.mul(sh->r, epsilon(ring, sh->j))));
        return finish_hyp(esd_matrix_hyp(cfg, u, v, ring.zero()));
    }

    if (const auto* us = std::get_if<UltrashortData>(&spec.data)) {
        check_root_index(cfg, us->i);
        if (!in_L_max(cfg, us->h))
            throw InvalidFormParameter("ultrashort root data (u, r) must lie in L_max");
        Scalar eps = epsilon(ring, -us->i);
        Scalar r = ring.neg(ring.mul(
            ring.mul(ring.mul(ring.bar(eps), special_units(ring).second), us->h.r), eps));
        return finish_hyp(esd_matrix_hyp(cfg, basis_vector(cfg, hyperbolic_slot(cfg, us->i)),
                                         vec_scale(ring, us->h.u, eps), r));
    }

    if (const auto* lg = std::get_if<LongData>(&spec.data)) {
        check_root_index(cfg, lg->i);
        if (!in_L_ev(cfg, lg->r))
            throw InvalidFormParameter("long root scalar must satisfy r = bar(r)");
        TransvectionSpec us{UltrashortData{lg->i, HeisElem{zero_vector(cfg), lg->r}}, spec.order};
        return root_transvection(cfg, us);
    }

    if (const auto* tp = std::get_if<TPlus1Data>(&spec.data))
        return finish_mod(t_plus1(cfg, tp->u, tp->a));

    const auto& tm = std::get<TMinus1Data>(spec.data);
    return finish_mod(t_minus1(cfg, tm.u, tm.a));
}

bool isometry_check(const SpaceConfig& cfg, const Matrix& m) {
    if (m.rows() != cfg.dim() || m.cols() != cfg.dim())
        throw DimensionMismatch("isometry_check: matrix size " + std::to_string(m.rows()));
    Scalar inv1 = special_units(cfg.ring()).second;
    return scalar_mul(inv1, bar_transpose(m) * cfg.psi() * m) == cfg.psi();
}

HeisElem congruence_defect(const SpaceConfig& cfg, const Matrix& m,
                           const std::vector<Scalar>& x) {
    const Ring& ring = cfg.ring();
    std::vector<Scalar> mx = mat_vec(m, x);
    std::vector<Scalar> u = vec_sub(ring, mx, x);
    Scalar a = inner(cfg, vec_sub(ring, x, mx), x);
    return HeisElem{std::move(u), a};
}

bool congruent_mod_Lmax(const SpaceConfig& cfg, const Matrix& m) {
    if (m.rows() != cfg.dim() || m.cols() != cfg.dim())
        throw DimensionMismatch("congruent_mod_Lmax: matrix size " + std::to_string(m.rows()));
    const Ring& ring = cfg.ring();
    for (int i = 0; i < cfg.dim(); ++i) {
        if (!heis_trace(cfg, congruence_defect(cfg, m, basis_vector(cfg, i))).is_zero())
            return false;
        for (int j = i + 1; j < cfg.dim(); ++j) {
            std::vector<Scalar> x = vec_add(ring, basis_vector(cfg, i), basis_vector(cfg, j));
            if (!heis_trace(cfg, congruence_defect(cfg, m, x)).is_zero()) return false;
        }
    }
    return true;
}

} // namespace oddu
