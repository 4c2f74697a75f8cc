#include "oddu/json_io.hpp"

#include <limits>

namespace oddu {

namespace {

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("bad integer literal: " + j.dump());
        }
    }
    throw ParseError("expected integer, got " + j.dump());
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

} // namespace

json ring_to_json(const Ring& ring) {
    json j;
    switch (ring.family()) {
        case Family::Integer: j["descriptor"] = "int"; break;
        case Family::Mod: j["descriptor"] = "mod"; break;
        case Family::GaussInteger: j["descriptor"] = "gauss_int"; break;
        case Family::GaussMod: j["descriptor"] = "gauss_mod"; break;
    }
    if (ring.is_finite()) j["k"] = int_to_json(ring.modulus());
    switch (ring.involution()) {
        case Involution::Identity: j["involution"] = "identity"; break;
        case Involution::Negation: j["involution"] = "negation"; break;
        case Involution::TwistI: j["involution"] = "twist_i"; break;
    }
    return j;
}

Ring ring_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("ring must be an object");
    std::string desc = field(j, "descriptor").get<std::string>();
    std::string inv = field(j, "involution").get<std::string>();

    Family family;
    if (desc == "int")
        family = Family::Integer;
    else if (desc == "mod")
        family = Family::Mod;
    else if (desc == "gauss_int")
        family = Family::GaussInteger;
    else if (desc == "gauss_mod")
        family = Family::GaussMod;
    else
        throw ParseError("unknown ring descriptor '" + desc + "'");

    Involution involution;
    if (inv == "identity")
        involution = Involution::Identity;
    else if (inv == "negation")
        involution = Involution::Negation;
    else if (inv == "twist_i")
        involution = Involution::TwistI;
    else
        throw ParseError("unknown involution '" + inv + "'");

    Int k = 0;
    if (family == Family::Mod || family == Family::GaussMod) k = int_from_json(field(j, "k"));
    return make_ring(family, involution, k);
}

json scalar_to_json(const Ring& ring, const Scalar& s) {
    if (ring.is_gaussian()) return json::array({int_to_json(s.re), int_to_json(s.im)});
    return int_to_json(s.re);
}

Scalar scalar_from_json(const Ring& ring, const json& j) {
    if (ring.is_gaussian()) {
        if (!j.is_array() || j.size() != 2)
            throw ParseError("Gaussian scalar must be [re, im]: " + j.dump());
        return ring.make(int_from_json(j[0]), int_from_json(j[1]));
    }
    return ring.make(int_from_json(j));
}

json scalar_vec_to_json(const Ring& ring, const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(ring, s));
    return arr;
}

std::vector<Scalar> scalar_vec_from_json(const Ring& ring, const json& j) {
    if (!j.is_array()) throw ParseError("expected array of scalars");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(scalar_from_json(ring, e));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.ring(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", ring_to_json(m.ring())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    Ring ring = ring_from_json(field(j, "ring"));
    int rows = field(j, "rows").get<int>();
    int cols = field(j, "cols").get<int>();
    const json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError("matrix entries must have 'rows' rows");
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
        for (int c = 0; c < cols; ++c)
            m.set(i, c, scalar_from_json(ring, row[static_cast<std::size_t>(c)]));
    }
    return m;
}

json word_to_json(const ElementaryWord& w) {
    json factors = json::array();
    for (const auto& f : w.factors)
        factors.push_back(json::array({f.i, f.j, scalar_to_json(w.ring, f.r)}));
    return json{{"size", w.size}, {"factors", std::move(factors)}};
}

ElementaryWord word_from_json(const Ring& ring, const json& j) {
    ElementaryWord w{ring, field(j, "size").get<int>(), {}};
    for (const auto& f : field(j, "factors")) {
        if (!f.is_array() || f.size() != 3) throw ParseError("word factor must be [i, j, r]");
        w.factors.push_back(
            {f[0].get<int>(), f[1].get<int>(), scalar_from_json(ring, f[2])});
    }
    return w;
}

json space_to_json(const SpaceConfig& cfg) {
    return json{{"ring", ring_to_json(cfg.ring())},
                {"m", cfg.m()},
                {"n", cfg.n()},
                {"phi", matrix_to_json(cfg.phi())},
                {"phi_inv", matrix_to_json(cfg.phi_inv())}};
}

SpaceConfig space_from_json(const json& j) {
    Ring ring = ring_from_json(field(j, "ring"));
    Matrix phi = matrix_from_json(field(j, "phi"));
    Matrix phi_inv = matrix_from_json(field(j, "phi_inv"));
    if (phi.ring() != ring || phi_inv.ring() != ring)
        throw ParseError("phi ring disagrees with the space ring");
    return SpaceConfig::make(ring, field(j, "m").get<int>(), field(j, "n").get<int>(),
                             std::move(phi), std::move(phi_inv));
}

json heis_to_json(const Ring& ring, const HeisElem& h) {
    return json{{"u", scalar_vec_to_json(ring, h.u)}, {"r", scalar_to_json(ring, h.r)}};
}

HeisElem heis_from_json(const Ring& ring, const json& j) {
    return HeisElem{scalar_vec_from_json(ring, field(j, "u")),
                    scalar_from_json(ring, field(j, "r"))};
}

json vvector_to_json(const Ring& ring, const VVector& v) {
    return json{{"v", scalar_vec_to_json(ring, v.a)}};
}

VVector vvector_from_json(const Ring& ring, const json& j) {
    return VVector{scalar_vec_from_json(ring, field(j, "v"))};
}

json conjugation_to_json(const Ring& ring, const ConjugationResult& res) {
    return json{{"kind", res.kind == TransvKind::TMinus1 ? "t_minus1" : "t_plus1"},
                {"u", scalar_vec_to_json(ring, res.u)},
                {"a", scalar_to_json(ring, res.a)},
                {"witness", heis_to_json(ring, res.witness)}};
}

ConjugationResult conjugation_from_json(const Ring& ring, const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    TransvKind k;
    if (kind == "t_minus1")
        k = TransvKind::TMinus1;
    else if (kind == "t_plus1")
        k = TransvKind::TPlus1;
    else
        throw ParseError("unknown conjugation kind '" + kind + "'");
    return ConjugationResult{k, scalar_vec_from_json(ring, field(j, "u")),
                             scalar_from_json(ring, field(j, "a")),
                             heis_from_json(ring, field(j, "witness"))};
}

json transvection_to_json(const Ring& ring, const TransvectionSpec& spec) {
    json j;
    j["order"] = spec.order == BasisOrder::HyperbolicFirst ? "hyperbolic_first" : "module_first";
    if (const auto* esd = std::get_if<EsdData>(&spec.data)) {
        j["kind"] = "esd";
        j["u"] = scalar_vec_to_json(ring, esd->u);
        j["v"] = scalar_vec_to_json(ring, esd->v);
        j["r"] = scalar_to_json(ring, esd->r);
    } else if (const auto* sh = std::get_if<ShortData>(&spec.data)) {
        j["kind"] = "short";
        j["i"] = sh->i;
        j["j"] = sh->j;
        j["r"] = scalar_to_json(ring, sh->r);
    } else if (const auto* us = std::get_if<UltrashortData>(&spec.data)) {
        j["kind"] = "ultrashort";
        j["i"] = us->i;
        j["h"] = heis_to_json(ring, us->h);
    } else if (const auto* lg = std::get_if<LongData>(&spec.data)) {
        j["kind"] = "long";
        j["i"] = lg->i;
        j["r"] = scalar_to_json(ring, lg->r);
    } else if (const auto* tp = std::get_if<TPlus1Data>(&spec.data)) {
        j["kind"] = "t_plus1";
        j["u"] = scalar_vec_to_json(ring, tp->u);
        j["a"] = scalar_to_json(ring, tp->a);
    } else {
        const auto& tm = std::get<TMinus1Data>(spec.data);
        j["kind"] = "t_minus1";
        j["u"] = scalar_vec_to_json(ring, tm.u);
        j["a"] = scalar_to_json(ring, tm.a);
    }
    return j;
}

TransvectionSpec transvection_from_json(const Ring& ring, const json& j) {
    TransvectionSpec spec;
    std::string order = field(j, "order").get<std::string>();
    if (order == "hyperbolic_first")
        spec.order = BasisOrder::HyperbolicFirst;
    else if (order == "module_first")
        spec.order = BasisOrder::ModuleFirst;
    else
        throw ParseError("unknown basis order '" + order + "'");

    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "esd")
        spec.data = EsdData{scalar_vec_from_json(ring, field(j, "u")),
                            scalar_vec_from_json(ring, field(j, "v")),
                            scalar_from_json(ring, field(j, "r"))};
    else if (kind == "short")
        spec.data = ShortData{field(j, "i").get<int>(), field(j, "j").get<int>(),
                              scalar_from_json(ring, field(j, "r"))};
    else if (kind == "ultrashort")
        spec.data = UltrashortData{field(j, "i").get<int>(), heis_from_json(ring, field(j, "h"))};
    else if (kind == "long")
        spec.data = LongData{field(j, "i").get<int>(), scalar_from_json(ring, field(j, "r"))};
    else if (kind == "t_plus1")
        spec.data = TPlus1Data{scalar_vec_from_json(ring, field(j, "u")),
                               scalar_from_json(ring, field(j, "a"))};
    else if (kind == "t_minus1")
        spec.data = TMinus1Data{scalar_vec_from_json(ring, field(j, "u")),
                                scalar_from_json(ring, field(j, "a"))};
    else
        throw ParseError("unknown transvection kind '" + kind + "'");
    return spec;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

} // namespace oddu
