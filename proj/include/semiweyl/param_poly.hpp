#pragma once

#include <map>
#include <utility>

#include "semiweyl/error.hpp"
#include "semiweyl/rational.hpp"

namespace semiweyl {

// Laurent polynomial in the single central parameter h (rendered as `h`,
// parsed from any of `h`, `t`, `q`: one degree of freedom, three names).
// Sparse map exponent -> coefficient; no zero coefficients are stored, the
// empty map is the zero element. Exponents may be negative; an element is
// "polynomial" iff all exponents are >= 0.
class ParamPoly {
public:
    using Terms = std::map<int, Rational>;

    ParamPoly() = default;

    static ParamPoly zero() { return ParamPoly(); }

    static ParamPoly constant(Rational c) {
        ParamPoly p;
        if (!c.is_zero()) p.terms_.emplace(0, std::move(c));
        return p;
    }

    static ParamPoly one() { return constant(Rational(1)); }

    // c * h^e
    static ParamPoly term(Rational c, int e) {
        ParamPoly p;
        if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
        return p;
    }

    static ParamPoly param(int e = 1) { return term(Rational(1), e); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second.is_one();
    }
    bool is_polynomial() const {
        return terms_.empty() || terms_.begin()->first >= 0;
    }

    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) fail(errc::context_mismatch, "parameter poly is not constant");
        return terms_.begin()->second;
    }

    Rational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int min_exponent() const {
        if (is_zero()) fail(errc::zero_input, "min_exponent of zero");
        return terms_.begin()->first;
    }

    int max_exponent() const {
        if (is_zero()) fail(errc::zero_input, "max_exponent of zero");
        return terms_.rbegin()->first;
    }

    void add_term(int e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    friend ParamPoly operator*(const ParamPoly& a, const Rational& c) {
        ParamPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, ca] : a.terms_) r.terms_.emplace(e, ca * c);
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    // Exact evaluation at h = c; Laurent part needs c != 0.
    Rational eval(const Rational& c) const {
        if (!is_polynomial() && c.is_zero())
            fail(errc::eval_at_zero_of_laurent,
                 "evaluating negative parameter powers at 0");
        Rational out(0);
        for (const auto& [e, coeff] : terms_) out += coeff * c.pow(e);
        return out;
    }

    // Substitution h -> h + 1 (binomial expansion, exact). Polynomial input only.
    ParamPoly shifted() const {
        if (!is_polynomial())
            fail(errc::negative_exponent, "shift of a Laurent element");
        ParamPoly r;
        for (const auto& [e, c] : terms_)
            for (int k = 0; k <= e; ++k) r.add_term(k, c * binomial(e, k));
        return r;
    }

    // * h^k (k may be negative)
    ParamPoly times_param_pow(int k) const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    // A family coefficient is invertible iff it is a single term a*h^k.
    bool invertible_in_family() const {
        if (is_zero()) fail(errc::zero_input, "invertibility of zero");
        return terms_.size() == 1;
    }

    // (h^k * p, k) with the minimal k >= 0 making the result polynomial.
    std::pair<ParamPoly, int> clear_negative_powers() const {
        if (is_zero()) fail(errc::zero_input, "clearing powers of zero");
        int k = min_exponent() < 0 ? -min_exponent() : 0;
        return {times_param_pow(k), k};
    }

private:
    Terms terms_;
};

}  // namespace semiweyl
