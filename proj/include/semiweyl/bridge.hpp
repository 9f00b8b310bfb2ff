#pragma once

#include <utility>

#include "semiweyl/error.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/weyl.hpp"

namespace semiweyl {

// Membership in the polynomial-coefficient subalgebra of the family:
// true iff no coefficient carries a negative power of h.
inline bool in_A_hat(const WeylElement& f) {
    if (f.context().mode() != AlgebraMode::family_q)
        fail(errc::context_mismatch, "A-hat membership is a family-mode question");
    for (const auto& [m, c] : f.terms())
        if (!c.is_polynomial()) return false;
    return true;
}

// Evaluation at h = 0, read commutatively: kills the parameter, fixes the
// generators and scalars. Accepts formal-t elements and family elements with
// polynomial coefficients.
inline PoissonElement gamma_hat(const WeylElement& f) {
    if (f.context().mode() == AlgebraMode::numeric)
        fail(errc::context_mismatch, "gamma-hat needs a symbolic context");
    PoissonElement out(f.context().n());
    for (const auto& [m, c] : f.terms()) {
        if (!c.is_polynomial())
            fail(errc::not_in_a_hat, "coefficient has a negative power of h");
        out.add_term(m, c.eval(Rational(0)));
    }
    return out;
}

// Canonical lift: same monomials, coefficients transferred verbatim.
inline WeylElement lift_to_formal(const PoissonElement& a) {
    WeylElement out(WeylContext::formal_t(a.n()));
    for (const auto& [m, c] : a.terms()) out.add_term(m, ParamPoly::constant(c));
    return out;
}

// Numeric-mode element reinterpreted in the family with constant coefficients.
inline WeylElement lift_numeric_to_family(const WeylElement& f) {
    if (f.context().mode() != AlgebraMode::numeric)
        fail(errc::context_mismatch, "lift expects a numeric-mode element");
    WeylElement out(WeylContext::family_q(f.context().n()));
    for (const auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
}

// Normal form of a numeric-mode element read as a commutative polynomial.
inline PoissonElement coefficient_transfer(const WeylElement& f) {
    if (f.context().mode() != AlgebraMode::numeric)
        fail(errc::context_mismatch, "transfer expects a numeric-mode element");
    PoissonElement out(f.context().n());
    for (const auto& [m, c] : f.terms()) out.add_term(m, c.constant_value());
    return out;
}

// (fg - gf)/h at h = 0 for explicit formal-t lifts. The commutator of any
// two lifts of commutative classes lands in h*A, so the division is exact;
// a non-divisible coefficient would mean the algebra itself is broken.
inline PoissonElement semiclassical_bracket_lifts(const WeylElement& fa,
                                                  const WeylElement& fb) {
    if (fa.context().mode() != AlgebraMode::formal_t ||
        fb.context().mode() != AlgebraMode::formal_t)
        fail(errc::context_mismatch, "lifts must live in the formal-t algebra");
    WeylElement comm = commutator(fa, fb);
    PoissonElement out(fa.context().n());
    for (const auto& [m, c] : comm.terms()) {
        if (!c.coeff(0).is_zero())
            fail(errc::internal_non_divisible,
                 "commutator coefficient not divisible by h");
        out.add_term(m, c.times_param_pow(-1).eval(Rational(0)));
    }
    return out;
}

inline PoissonElement semiclassical_bracket(const PoissonElement& a,
                                            const PoissonElement& b) {
    PoissonElement::require_same_arity(a, b);
    return semiclassical_bracket_lifts(lift_to_formal(a), lift_to_formal(b));
}

namespace detail {

// psi / psi-inverse are the even-slot coefficient rescalings: a monomial
// whose even-indexed generators carry total exponent e gets its coefficient
// multiplied by h^(dir * e).
inline WeylElement rescale_even_slots(const WeylElement& f, int dir) {
    if (f.context().mode() != AlgebraMode::family_q)
        fail(errc::context_mismatch, "psi acts on family-mode elements");
    WeylElement out(f.context());
    for (const auto& [m, c] : f.terms())
        out.add_term(m, c.times_param_pow(dir * m.even_slot_sum()));
    return out;
}

}  // namespace detail

inline WeylElement psi(const WeylElement& f) { return detail::rescale_even_slots(f, 1); }

inline WeylElement psi_inverse(const WeylElement& f) {
    return detail::rescale_even_slots(f, -1);
}

// The fixed-q isomorphism onto the Weyl algebra: x_{2l} -> q x_{2l}, odd
// generators fixed; per term the coefficient picks up q^(even-slot sum).
inline WeylElement iso_Aq_to_Wn(const WeylElement& f, const Rational& q) {
    if (f.context().mode() != AlgebraMode::numeric || f.context().q() != q)
        fail(errc::context_mismatch, "element does not live in the q-deformation");
    WeylElement out(WeylContext::weyl(f.context().n()));
    for (const auto& [m, c] : f.terms())
        out.add_term(m, c * q.pow(m.even_slot_sum()));
    return out;
}

}  // namespace semiweyl
