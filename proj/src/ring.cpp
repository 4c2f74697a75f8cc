#include "oddu/ring.hpp"

#include <cctype>

namespace oddu {

namespace {

Int mod_reduce(const Int& x, const Int& k) {
    Int r = x % k;
    if (r < 0) r += k;
    return r;
}

// Extended gcd: returns (g, x) with a*x == g (mod b), g = gcd(a, b) >= 0.
std::pair<Int, Int> egcd_mod(Int a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
    }
    return {old_r, old_s};
}

// Solve 2x == c (mod k); any solution will do.
std::optional<Int> solve_two_x(const Int& c, const Int& k) {
    auto [g, inv] = egcd_mod(2, k);
    if (c % g != 0) return std::nullopt;
    Int kk = k / g;
    Int cc = (c / g) % kk;
    auto [g2, inv2] = egcd_mod(2 / g, kk);
    (void)g2;
    return mod_reduce(cc * inv2, k);
}

bool is_even(const Int& x) { return x % 2 == 0; }

} // namespace

Ring make_ring(Family family, Involution involution, Int k) {
    Ring r;
    r.family_ = family;
    r.involution_ = involution;
    bool modular = family == Family::Mod || family == Family::GaussMod;
    if (modular) {
        if (k < 2) throw Error("modular ring needs k >= 2");
        r.k_ = std::move(k);
    } else if (k != 0) {
        throw Error("non-modular ring takes no modulus");
    }
    bool gaussian = family == Family::GaussInteger || family == Family::GaussMod;
    if (involution == Involution::TwistI && !gaussian)
        throw IncompatibleInvolution("twist_i involution requires a Gaussian descriptor");
    return r;
}

Int Ring::carrier_size() const {
    if (!is_finite()) throw Error("carrier_size: ring is infinite");
    return is_gaussian() ? Int(k_ * k_) : k_;
}

Scalar Ring::element_at(const Int& idx) const {
    if (!is_finite()) throw Error("element_at: ring is infinite");
    if (idx < 0 || idx >= carrier_size()) throw BadIndex("element_at: index out of range");
    if (is_gaussian()) return Scalar{idx % k_, idx / k_};
    return Scalar{idx};
}

Scalar Ring::normalize(Scalar s) const {
    if (!is_gaussian() && s.im != 0)
        throw RingMismatch("imaginary part in a non-Gaussian ring");
    if (is_finite()) {
        s.re = mod_reduce(s.re, k_);
        s.im = is_gaussian() ? mod_reduce(s.im, k_) : Int(0);
    }
    return s;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
    return normalize(Scalar{a.re + b.re, a.im + b.im});
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
    return normalize(Scalar{a.re - b.re, a.im - b.im});
}

Scalar Ring::neg(const Scalar& a) const { return normalize(Scalar{-a.re, -a.im}); }

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
    if (is_gaussian())
        return normalize(Scalar{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
    return normalize(Scalar{a.re * b.re});
}

Scalar Ring::bar(const Scalar& a) const {
    switch (involution_) {
        case Involution::Identity: return a;
        case Involution::Negation: return neg(a);
        case Involution::TwistI:
            // i * conj(re + im*i) = im + re*i: the twist swaps components.
            return normalize(Scalar{a.im, a.re});
    }
    throw Error("unreachable involution");
}

std::optional<Scalar> Ring::try_inverse(const Scalar& a) const {
    switch (family_) {
        case Family::Integer:
            if (a.re == 1 || a.re == -1) return a;
            return std::nullopt;
        case Family::GaussInteger:
            if (a.im == 0 && (a.re == 1 || a.re == -1)) return a;
            if (a.re == 0 && (a.im == 1 || a.im == -1)) return Scalar{0, -a.im};
            return std::nullopt;
        case Family::Mod: {
            auto [g, x] = egcd_mod(a.re, k_);
            if (g != 1) return std::nullopt;
            return normalize(Scalar{x});
        }
        case Family::GaussMod: {
            Int norm = mod_reduce(a.re * a.re + a.im * a.im, k_);
            auto [g, x] = egcd_mod(norm, k_);
            if (g != 1) return std::nullopt;
            // z^-1 = conj(z) * norm(z)^-1
            return normalize(Scalar{a.re * x, -a.im * x});
        }
    }
    throw Error("unreachable family");
}

Scalar Ring::sample(SeededRng& rng) const {
    if (is_finite()) {
        Int re = Int(rng.below(static_cast<std::uint64_t>(k_)));
        if (!is_gaussian()) return Scalar{re};
        Int im = Int(rng.below(static_cast<std::uint64_t>(k_)));
        return Scalar{re, im};
    }
    long long re = rng.range(-4, 4);
    if (!is_gaussian()) return Scalar{re};
    return Scalar{re, rng.range(-4, 4)};
}

bool Ring::exists_r_plus_rbar(const Scalar& c) const {
    if (is_finite()) {
        Int size = carrier_size();
        for (Int i = 0; i < size; ++i) {
            Scalar r = element_at(i);
            if (add(r, bar(r)) == c) return true;
        }
        return false;
    }
    switch (involution_) {
        case Involution::Identity: return is_even(c.re) && is_even(c.im);
        case Involution::Negation: return c.is_zero();
        case Involution::TwistI: return c.re == c.im; // image is {t(1+i)}
    }
    throw Error("unreachable involution");
}

std::optional<Scalar> Ring::solve_bar_minus(const Scalar& c) const {
    switch (involution_) {
        case Involution::Identity:
            if (c.is_zero()) return zero();
            return std::nullopt;
        case Involution::Negation: {
            // bar(a) - a = -2a = c
            if (is_finite()) {
                auto re = solve_two_x(mod_reduce(-c.re, k_), k_);
                if (!re) return std::nullopt;
                if (!is_gaussian()) return normalize(Scalar{*re});
                auto im = solve_two_x(mod_reduce(-c.im, k_), k_);
                if (!im) return std::nullopt;
                return normalize(Scalar{*re, *im});
            }
            if (!is_even(c.re) || !is_even(c.im)) return std::nullopt;
            return normalize(Scalar{-c.re / 2, -c.im / 2});
        }
        case Involution::TwistI: {
            // bar(a) - a = (q - p)(1 - i); solvable iff c = (t, -t).
            if (is_finite()) {
                if (mod_reduce(c.re + c.im, k_) != 0) return std::nullopt;
            } else if (c.re + c.im != 0) {
                return std::nullopt;
            }
            return normalize(Scalar{0, c.re}); // bar(ti) - ti = (t, -t)
        }
    }
    throw Error("unreachable involution");
}

std::string Ring::to_string() const {
    std::string base;
    switch (family_) {
        case Family::Integer: base = "Z"; break;
        case Family::Mod: base = "Z/" + k_.str(); break;
        case Family::GaussInteger: base = "Z[i]"; break;
        case Family::GaussMod: base = "Z[i]/" + k_.str(); break;
    }
    switch (involution_) {
        case Involution::Identity: return base + " (identity)";
        case Involution::Negation: return base + " (negation)";
        case Involution::TwistI: return base + " (twist_i)";
    }
    return base;
}

std::pair<Scalar, Scalar> special_units(const Ring& ring) {
    Scalar b1 = ring.bar_one();
    auto inv = ring.try_inverse(b1);
    if (!inv) throw NotAUnit("bar(1) is not a unit");
    return {b1, *inv};
}

Report check_pseudoinvolution(const Ring& ring, long long sample_budget) {
    return check_pseudoinvolution(ring, sample_budget,
                                  [&ring](const Scalar& s) { return ring.bar(s); });
}

Report check_pseudoinvolution(const Ring& ring, long long sample_budget,
                              const std::function<Scalar(const Scalar&)>& bar_fn) {
    if (sample_budget < 1) throw Error("sample_budget must be >= 1");
    Report rep;

    std::vector<Scalar> pool;
    bool exhaustive = ring.is_finite() && ring.carrier_size() <= sample_budget;
    if (exhaustive) {
        Int size = ring.carrier_size();
        for (Int i = 0; i < size; ++i) pool.push_back(ring.element_at(i));
    } else {
        SeededRng rng(0x0dd5eedULL);
        for (long long i = 0; i < sample_budget; ++i) pool.push_back(ring.sample(rng));
        pool.push_back(ring.zero());
        pool.push_back(ring.one());
    }

    auto witness = [](const Scalar& a, const Scalar& b) {
        return "a=" + print_scalar(a) + ", b=" + print_scalar(b);
    };

    bool ok = true;
    std::string fail;
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            if (bar_fn(ring.add(a, b)) != ring.add(bar_fn(a), bar_fn(b))) {
                ok = false;
                fail = witness(a, b);
                break;
            }
        }
        if (!ok) break;
    }
    rep.add("bar is additive", ok, fail);

    ok = true;
    fail.clear();
    for (const auto& a : pool) {
        if (bar_fn(bar_fn(a)) != a) {
            ok = false;
            fail = "a=" + print_scalar(a);
            break;
        }
    }
    rep.add("bar(bar(a)) = a", ok, fail);

    Scalar b1 = bar_fn(ring.one());
    auto b1_inv = ring.try_inverse(b1);
    rep.add("bar(1) is a unit", b1_inv.has_value(), b1_inv ? "" : "bar(1)=" + print_scalar(b1));

    if (b1_inv) {
        ok = true;
        fail.clear();
        for (const auto& a : pool) {
            for (const auto& b : pool) {
                Scalar lhs = bar_fn(ring.mul(a, b));
                Scalar rhs = ring.mul(ring.mul(bar_fn(b), *b1_inv), bar_fn(a));
                if (lhs != rhs) {
                    ok = false;
                    fail = witness(a, b);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("bar(ab) = bar(b) bar(1)^-1 bar(a)", ok, fail);

        rep.add("bar(1) bar(1) = bar(bar(1)^-1)", ring.mul(b1, b1) == bar_fn(*b1_inv));
    }

    return rep;
}

std::string print_scalar(const Scalar& s) {
    auto coeff = [](const Int& v) { return v.str(); };
    if (s.im == 0) return coeff(s.re);
    std::string imag;
    if (s.im == 1)
        imag = "i";
    else if (s.im == -1)
        imag = "-i";
    else
        imag = coeff(s.im) + "i";
    if (s.re == 0) return imag;
    if (s.im > 0) return coeff(s.re) + "+" + imag;
    return coeff(s.re) + imag;
}

Scalar parse_scalar(const Ring& ring, const std::string& text) {
    // Accepts the forms emitted by print_scalar: "a", "bi", "a+bi", "a-bi",
    // with "i"/"-i" for unit imaginary parts.
    std::size_t pos = 0;
    auto fail = [&text]() -> Scalar { throw ParseError("bad scalar: '" + text + "'"); };
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    struct Term {
        Int value;
        bool imaginary;
    };
    std::vector<Term> terms;

    skip_ws();
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!terms.empty()) {
            return fail(); // terms must be joined by +/-
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        bool imag = pos < text.size() && text[pos] == 'i';
        if (imag) ++pos;
        if (digits.empty() && !imag) return fail();
        Int mag = digits.empty() ? Int(1) : Int(digits);
        terms.push_back({sign * mag, imag});
        skip_ws();
    }
    if (terms.empty()) return fail();

    Int re = 0, im = 0;
    for (const auto& t : terms)
        (t.imaginary ? im : re) += t.value;
    if (im != 0 && !ring.is_gaussian()) return fail();
    return ring.make(re, im);
}

} // namespace oddu
