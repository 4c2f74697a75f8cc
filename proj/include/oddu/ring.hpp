#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "oddu/error.hpp"
#include "oddu/util.hpp"

namespace oddu {

using Int = boost::multiprecision::cpp_int;

/// An exact ring element. Plain integer rings keep im == 0; Gaussian rings
/// use (re, im) for re + im*i. Residues are stored in canonical range [0, k),
/// so equality is plain componentwise comparison.
struct Scalar {
    Int re{0};
    Int im{0};

    Scalar() = default;
    Scalar(Int r) : re(std::move(r)) {} // NOLINT: implicit by design
    Scalar(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

enum class Family { Integer, Mod, GaussInteger, GaussMod };
enum class Involution { Identity, Negation, TwistI };

/// A commutative ring equipped with a pseudoinvolution r -> bar(r).
/// All arithmetic goes through the ring so that residues stay canonical.
class Ring {
public:
    Ring() = default;

    Family family() const { return family_; }
    Involution involution() const { return involution_; }
    const Int& modulus() const { return k_; }

    bool is_gaussian() const {
        return family_ == Family::GaussInteger || family_ == Family::GaussMod;
    }
    bool is_finite() const { return family_ == Family::Mod || family_ == Family::GaussMod; }

    /// Number of elements for finite rings (k or k^2).
    Int carrier_size() const;
    /// idx-th element of a finite ring, 0 <= idx < carrier_size().
    Scalar element_at(const Int& idx) const;

    Scalar normalize(Scalar s) const;

    Scalar zero() const { return Scalar{}; }
    Scalar one() const { return normalize(Scalar{1}); }
    Scalar from_int(long long v) const { return normalize(Scalar{v}); }
    Scalar make(Int re, Int im = 0) const { return normalize(Scalar{std::move(re), std::move(im)}); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;

    /// The pseudoinvolution.
    Scalar bar(const Scalar& a) const;

    /// bar(1); always a unit for the shipped involutions.
    Scalar bar_one() const { return bar(one()); }

    std::optional<Scalar> try_inverse(const Scalar& a) const;
    bool is_unit(const Scalar& a) const { return try_inverse(a).has_value(); }

    /// Uniform-ish sample: whole carrier for finite rings, small window for Z.
    Scalar sample(SeededRng& rng) const;

    /// Does c lie in the image of r -> r + bar(r)?  (L_min solvability.)
    /// Finite rings search exhaustively; infinite rings use the closed form
    /// of the shipped involutions.
    bool exists_r_plus_rbar(const Scalar& c) const;

    /// Solve bar(a) - a = c, if possible.
    std::optional<Scalar> solve_bar_minus(const Scalar& c) const;

    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.family_ == b.family_ && a.involution_ == b.involution_ && a.k_ == b.k_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    friend Ring make_ring(Family, Involution, Int);

    Family family_ = Family::Integer;
    Involution involution_ = Involution::Identity;
    Int k_{0}; // modulus; 0 for the infinite families
};

/// Construct a ring, validating descriptor/involution compatibility.
/// Throws IncompatibleInvolution if TwistI is requested on a non-Gaussian
/// descriptor, Error if a modular family gets k < 2.
Ring make_ring(Family family, Involution involution, Int k = 0);

/// (bar(1), bar(1)^-1). Throws NotAUnit if bar(1) is not invertible.
std::pair<Scalar, Scalar> special_units(const Ring& ring);

/// Check the pseudoinvolution axioms. Finite carriers no larger than
/// sample_budget are checked exhaustively, otherwise sample_budget random
/// pairs are drawn. The bar_fn overload substitutes a custom involution
/// (used to demonstrate failures on non-examples).
Report check_pseudoinvolution(const Ring& ring, long long sample_budget);
Report check_pseudoinvolution(const Ring& ring, long long sample_budget,
                              const std::function<Scalar(const Scalar&)>& bar_fn);

/// Canonical text form: "3", "-2", "1+2i", "2i", "i", ...
std::string print_scalar(const Scalar& s);
/// Inverse of print_scalar; normalizes into the ring. Throws ParseError.
Scalar parse_scalar(const Ring& ring, const std::string& text);

} // namespace oddu
