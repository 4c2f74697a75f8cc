// Command-line front end: instance generation, verification, factorization,
// conjugation, and a worked demo over Z/5.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oddu/instance.hpp"

namespace {

using namespace oddu;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Ring parse_ring_flag(const std::string& ring_text, const std::string& involution_text) {
    Family family;
    Int k = 0;
    std::string name = ring_text;
    auto colon = name.find(':');
    std::string base = colon == std::string::npos ? name : name.substr(0, colon);
    if (colon != std::string::npos) {
        try {
            k = Int(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("bad modulus in --ring " + ring_text);
        }
    }
    if (base == "int")
        family = Family::Integer;
    else if (base == "mod")
        family = Family::Mod;
    else if (base == "gauss" || base == "gauss_int")
        family = Family::GaussInteger;
    else if (base == "gaussmod" || base == "gauss_mod")
        family = Family::GaussMod;
    else
        throw ParseError("unknown ring '" + ring_text + "'");

    Involution inv;
    if (involution_text == "identity")
        inv = Involution::Identity;
    else if (involution_text == "negation")
        inv = Involution::Negation;
    else if (involution_text == "twist-i" || involution_text == "twist_i")
        inv = Involution::TwistI;
    else
        throw ParseError("unknown involution '" + involution_text + "'");

    return make_ring(family, inv, k);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

InstanceFile load_instance(const std::string& path) {
    return instance_from_json(parse_json_text(read_file(path)));
}

int report_outcome(const Report& rep) {
    std::cout << rep.summary();
    if (rep.all_pass()) {
        std::cout << "all checks passed\n";
        return kExitOk;
    }
    std::cout << "CHECKS FAILED\n";
    return kExitCheckFailed;
}

int cmd_gen(const std::string& ring_text, const std::string& involution_text, int m, int n,
            const std::string& phi_text, std::uint64_t seed, bool force_d,
            const std::string& out_path) {
    Ring ring = parse_ring_flag(ring_text, involution_text);

    Matrix phi(ring, 0, 0), phi_inv(ring, 0, 0);
    if (phi_text == "identity") {
        std::tie(phi, phi_inv) = standard_phi(ring, n, StandardPhi::Identity);
    } else if (phi_text == "skew-standard") {
        std::tie(phi, phi_inv) = standard_phi(ring, n, StandardPhi::SkewStandard);
    } else if (phi_text.rfind("file:", 0) == 0) {
        json j = parse_json_text(read_file(phi_text.substr(5)));
        phi = matrix_from_json(j.at("phi"));
        phi_inv = matrix_from_json(j.at("phi_inv"));
    } else {
        throw ParseError("--phi must be identity, skew-standard, or file:<path>");
    }

    SpaceConfig cfg = SpaceConfig::make(ring, m, n, phi, phi_inv);
    if (!anti_hermitian_check(cfg).all_pass())
        throw InvalidPhi("phi fails the anti-Hermitian criterion for this ring");

    VVector v = sample_vvector(cfg, seed);
    if (force_d) {
        std::vector<Scalar> w(v.a.begin() + 1, v.a.end());
        auto a1 = force_D_a1(cfg, w);
        if (!a1) throw ConditionUnsolvable("no a_1 satisfies condition (D) for the sampled tail");
        v.a[0] = *a1;
    }

    InstanceFile inst{cfg, v, seed};
    write_output(out_path, instance_to_json(inst));
    return kExitOk;
}

int cmd_verify(const std::string& in_path, const std::string& check) {
    InstanceFile inst = load_instance(in_path);

    CheckSet set;
    if (check == "all")
        set = CheckSet::All;
    else if (check == "isometry")
        set = CheckSet::Isometry;
    else if (check == "congruence")
        set = CheckSet::Congruence;
    else if (check == "conditions")
        set = CheckSet::Conditions;
    else if (check == "factorization")
        set = CheckSet::Factorization;
    else if (check == "conjugation")
        set = CheckSet::Conjugation;
    else
        throw ParseError("unknown check '" + check + "'");

    Report rep = run_space_checks(inst.cfg);
    if (inst.v) {
        Report more = run_instance_checks(inst.cfg, *inst.v, set);
        for (auto& item : more.items) rep.items.push_back(std::move(item));
    } else {
        std::cout << "note: instance has no v; running space-level checks only\n";
    }
    return report_outcome(rep);
}

int cmd_factor(const std::string& in_path, const std::string& out_path) {
    InstanceFile inst = load_instance(in_path);
    if (!inst.v) throw ParseError("instance has no v to factor");
    const SpaceConfig& cfg = inst.cfg;

    ElementaryWord wl = factor_L(cfg, *inst.v);
    ElementaryWord wls = factor_L_star(cfg, *inst.v);
    write_output(out_path, json{{"L", word_to_json(wl)}, {"L_star", word_to_json(wls)}});

    Report rep;
    rep.add("word_product(factor_L) = L", word_product(wl) == build_L(cfg, *inst.v));
    rep.add("word_product(factor_L_star) = L*", word_product(wls) == build_L_star(cfg, *inst.v));
    return report_outcome(rep);
}

int cmd_conjugate(const std::string& in_path, const std::string& out_path) {
    InstanceFile inst = load_instance(in_path);
    if (!inst.v) throw ParseError("instance has no v to conjugate");
    const SpaceConfig& cfg = inst.cfg;
    const Ring& ring = cfg.ring();

    ConjugationResult cm = conj_L_to_transvection(cfg, *inst.v);
    ConjugationResult cp = conj_Lstar_to_transvection(cfg, *inst.v);
    write_output(out_path,
                 json{{"L", conjugation_to_json(ring, cm)}, {"L_star", conjugation_to_json(ring, cp)}});

    Report rep;
    rep.add("P^t L P = T_-1(u_1, a_1)",
            conjugate_to_module_first(cfg, build_L(cfg, *inst.v)) == matrix_of(cfg, cm));
    rep.add("P^t L* P = T_1(u_2, -bar(1) a_1)",
            conjugate_to_module_first(cfg, build_L_star(cfg, *inst.v)) == matrix_of(cfg, cp));
    rep.add("witness(L) in L_max iff condition_D",
            in_L_max(cfg, cm.witness) == condition_D(cfg, *inst.v));
    return report_outcome(rep);
}

int cmd_demo() {
    // The worked example: Z/5 with negation, m = 1, n = 2, phi = I, v = (0, 1, 2).
    Ring ring = make_ring(Family::Mod, Involution::Negation, 5);
    auto [phi, phi_inv] = standard_phi(ring, 2, StandardPhi::Identity);
    SpaceConfig cfg = SpaceConfig::make(ring, 1, 2, phi, phi_inv);
    VVector v{{ring.from_int(0), ring.from_int(1), ring.from_int(2)}};

    std::cout << "space: " << ring.to_string() << ", m=1, n=2, phi=I\n";
    std::cout << "v = (0, 1, 2)\n\n";

    Matrix l = build_L(cfg, v);
    std::cout << "L(v) =\n" << to_pretty_string(l) << "\n";

    ElementaryWord word = factor_L(cfg, v);
    std::cout << "factor_L(v): " << word.factors.size() << " elementary factors:\n";
    for (const auto& f : word.factors)
        std::cout << "  e[" << f.i << "," << f.j << "](" << print_scalar(f.r) << ")\n";
    std::cout << "\n";

    Report rep;
    rep.add("word_product(factor_L) = L", word_product(word) == l);
    rep.add("condition_D", condition_D(cfg, v));
    rep.add("isometry(L)", isometry_check(cfg, l));
    rep.add("congruence(L)", congruent_mod_Lmax(cfg, l));

    Matrix conj = conjugate_to_module_first(cfg, l);
    std::cout << "P^t L(v) P =\n" << to_pretty_string(conj) << "\n";
    ConjugationResult cm = conj_L_to_transvection(cfg, v);
    std::cout << "matched generator: T_-1(u, a) with u = (";
    for (std::size_t i = 0; i < cm.u.size(); ++i)
        std::cout << (i ? ", " : "") << print_scalar(cm.u[i]);
    std::cout << "), a = " << print_scalar(cm.a) << "\n\n";
    rep.add("P^t L P = T_-1(u_1, a_1)", conj == matrix_of(cfg, cm));

    VVector back = transvection_to_vaserstein(cfg, TransvKind::TMinus1, cm.u, cm.a);
    std::cout << "decomposed back: v = (";
    for (std::size_t i = 0; i < back.a.size(); ++i)
        std::cout << (i ? ", " : "") << print_scalar(back.a[i]);
    std::cout << ")\n\n";
    rep.add("round trip reproduces v", back.a == v.a);

    return report_outcome(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact odd quadratic spaces: bordered elementary matrices, factorization "
                 "certificates, and hyperbolic unitary generators"};
    app.require_subcommand(1);

    std::string ring_text = "mod:5";
    std::string involution_text = "negation";
    int m = 1, n = 0;
    std::string phi_text = "identity";
    std::uint64_t seed = 0;
    bool force_d = false;
    std::string in_path, out_path, check = "all";

    CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("--ring", ring_text, "int | mod:<k> | gauss | gaussmod:<k>");
    gen->add_option("--involution", involution_text, "identity | negation | twist-i");
    gen->add_option("--m", m, "hyperbolic rank (>= 1)");
    gen->add_option("--n", n, "rank of V0 (>= 0)");
    gen->add_option("--phi", phi_text, "identity | skew-standard | file:<path>");
    gen->add_option("--seed", seed, "RNG seed (deterministic output)");
    gen->add_flag("--force-D", force_d, "solve a_1 so that condition (D) holds");
    gen->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the identity oracles on an instance");
    verify->add_option("--in", in_path, "instance file")->required();
    verify->add_option("--check", check,
                       "all | isometry | congruence | conditions | factorization | conjugation");

    CLI::App* factor = app.add_subcommand("factor", "emit elementary words for L(v) and L(v)*");
    factor->add_option("--in", in_path, "instance file")->required();
    factor->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* conjugate = app.add_subcommand("conjugate", "match L(v), L(v)* to T_-1, T_1");
    conjugate->add_option("--in", in_path, "instance file")->required();
    conjugate->add_option("--out", out_path, "output path (default stdout)");

    app.add_subcommand("demo", "worked example over Z/5 with v = (0, 1, 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("gen"))
            return cmd_gen(ring_text, involution_text, m, n, phi_text, seed, force_d, out_path);
        if (app.got_subcommand("verify")) return cmd_verify(in_path, check);
        if (app.got_subcommand("factor")) return cmd_factor(in_path, out_path);
        if (app.got_subcommand("conjugate")) return cmd_conjugate(in_path, out_path);
        return cmd_demo();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        // nlohmann type errors on structurally wrong JSON land here
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
