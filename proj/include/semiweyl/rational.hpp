#pragma once

#include <gmp.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <utility>

#include "semiweyl/error.hpp"

namespace semiweyl {

// Exact rational number. Always canonical: reduced to lowest terms,
// denominator > 0, zero stored as 0/1.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }

    Rational(long num, long den) {
        mpq_init(q_);
        if (den == 0) {
            mpq_clear(q_);
            fail(errc::division_by_zero, "rational with zero denominator");
        }
        mpz_set_si(mpq_numref(q_), num);
        mpz_set_si(mpq_denref(q_), den);
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    // Accepts "num" or "num/den", base 10, no whitespace.
    static Rational from_string(std::string_view s) {
        Rational r;
        std::string buf(s);
        if (buf.empty() || mpq_set_str(r.q_, buf.c_str(), 10) != 0)
            fail(errc::malformed_input, "bad rational literal '" + buf + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            fail(errc::division_by_zero, "rational with zero denominator");
        mpq_canonicalize(r.q_);
        return r;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(errc::division_by_zero, "rational division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }

    Rational inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
        return r;  // power of a canonical value is canonical
    }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    // "n" when the denominator is 1, else "n/d".
    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string out(raw);
        void (*free_fn)(void*, size_t) = nullptr;
        mp_get_memory_functions(nullptr, nullptr, &free_fn);
        free_fn(raw, std::strlen(raw) + 1);
        return out;
    }

private:
    mpq_t q_;
};

inline Rational factorial(unsigned long k) {
    Rational r(1);
    for (unsigned long i = 2; i <= k; ++i) r *= Rational(static_cast<long>(i));
    return r;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long i = 0; i < k; ++i)
        r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace semiweyl
