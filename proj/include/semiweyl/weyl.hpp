#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semiweyl/config.hpp"
#include "semiweyl/error.hpp"
#include "semiweyl/monomial.hpp"
#include "semiweyl/param_poly.hpp"
#include "semiweyl/rational.hpp"

namespace semiweyl {

// Which member of the family an element lives in. The defining relation is
// x_{2l} x_{2l-1} = x_{2l-1} x_{2l} + h with h the central parameter:
//   formal_t : coefficients polynomial in h        (relation constant h)
//   family_q : coefficients Laurent in h           (relation constant h)
//   numeric  : coefficients constant, h fixed at q (relation constant q)
enum class AlgebraMode { formal_t, family_q, numeric };

class WeylContext {
public:
    static WeylContext formal_t(int n) { return WeylContext(n, AlgebraMode::formal_t, Rational(0)); }
    static WeylContext family_q(int n) { return WeylContext(n, AlgebraMode::family_q, Rational(0)); }
    static WeylContext numeric(int n, Rational q) {
        if (q.is_zero()) fail(errc::zero_input, "numeric deformation needs q != 0");
        return WeylContext(n, AlgebraMode::numeric, std::move(q));
    }
    static WeylContext weyl(int n) { return numeric(n, Rational(1)); }

    int n() const { return n_; }
    int vars() const { return 2 * n_; }
    AlgebraMode mode() const { return mode_; }

    const Rational& q() const {
        if (mode_ != AlgebraMode::numeric)
            fail(errc::context_mismatch, "q is only defined in numeric mode");
        return q_;
    }

    bool symbolic() const { return mode_ != AlgebraMode::numeric; }

    // The value of [x_{2l}, x_{2l-1}] as a scalar.
    ParamPoly relation_constant() const {
        return symbolic() ? ParamPoly::param() : ParamPoly::constant(q_);
    }

    std::string algebra_name() const {
        switch (mode_) {
            case AlgebraMode::formal_t: return "An";
            case AlgebraMode::family_q: return "Aqhat";
            case AlgebraMode::numeric: return q_.is_one() ? "Wn" : "Aq=" + q_.str();
        }
        return "?";
    }

    friend bool operator==(const WeylContext& a, const WeylContext& b) {
        if (a.n_ != b.n_ || a.mode_ != b.mode_) return false;
        return a.mode_ != AlgebraMode::numeric || a.q_ == b.q_;
    }
    friend bool operator!=(const WeylContext& a, const WeylContext& b) { return !(a == b); }

private:
    WeylContext(int n, AlgebraMode mode, Rational q) : n_(n), mode_(mode), q_(std::move(q)) {
        if (n < 1) fail(errc::index_out_of_range, "context needs n >= 1");
    }

    int n_;
    AlgebraMode mode_;
    Rational q_;
};

// Element in normal form: sparse map standard monomial -> coefficient.
// The representation IS the normal form; maps come out of every operation
// with zero coefficients dropped and mode invariants enforced.
class WeylElement {
public:
    using Terms = std::map<Monomial, ParamPoly, GrlexGreater>;

    explicit WeylElement(WeylContext ctx) : ctx_(std::move(ctx)) {}

    static WeylElement zero(const WeylContext& ctx) { return WeylElement(ctx); }

    static WeylElement constant(const WeylContext& ctx, const ParamPoly& c) {
        WeylElement f(ctx);
        f.add_term(Monomial::unit(ctx.vars()), c);
        return f;
    }

    static WeylElement constant(const WeylContext& ctx, const Rational& c) {
        return constant(ctx, ParamPoly::constant(c));
    }

    static WeylElement one(const WeylContext& ctx) { return constant(ctx, Rational(1)); }

    static WeylElement generator(const WeylContext& ctx, int i) {  // 1-based
        WeylElement f(ctx);
        f.add_term(Monomial::generator(ctx.vars(), i), ParamPoly::one());
        return f;
    }

    static WeylElement monomial(const WeylContext& ctx, Monomial m, ParamPoly c) {
        WeylElement f(ctx);
        if (m.nvars() != ctx.vars()) fail(errc::arity_mismatch, "monomial arity mismatch");
        f.add_term(std::move(m), std::move(c));
        return f;
    }

    const WeylContext& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {  // degree of 0 taken as -1
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const ParamPoly& c) {
        if (c.is_zero()) return;
        check_coefficient(c);
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ParamPoly coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ParamPoly::zero() : it->second;
    }

    friend WeylElement operator+(const WeylElement& a, const WeylElement& b) {
        require_same_context(a, b);
        WeylElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend WeylElement operator-(const WeylElement& a, const WeylElement& b) {
        require_same_context(a, b);
        WeylElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    WeylElement operator-() const {
        WeylElement r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    // Scalar multiple; the scalar must fit the mode (numeric: constant only,
    // formal_t: polynomial only).
    WeylElement scaled(const ParamPoly& s) const {
        WeylElement r(ctx_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    static void require_same_context(const WeylElement& a, const WeylElement& b) {
        if (a.ctx_ != b.ctx_)
            fail(errc::context_mismatch, "elements from different contexts");
    }

private:
    void check_coefficient(const ParamPoly& c) const {
        switch (ctx_.mode()) {
            case AlgebraMode::formal_t:
                if (!c.is_polynomial())
                    fail(errc::negative_exponent,
                         "formal-t coefficients must be polynomial in h");
                break;
            case AlgebraMode::numeric:
                if (!c.is_constant())
                    fail(errc::context_mismatch,
                         "numeric-mode coefficients must be parameter-free");
                break;
            case AlgebraMode::family_q:
                break;
        }
    }

    WeylContext ctx_;
    Terms terms_;
};

namespace detail {

inline void check_degree_cap(const WeylElement& f, const WeylElement& g) {
    int df = f.degree(), dg = g.degree();
    if (df >= 0 && dg >= 0 && df + dg > degree_cap())
        fail(errc::degree_cap_exceeded,
             "product degree " + std::to_string(df + dg) + " exceeds cap " +
                 std::to_string(degree_cap()));
}

}  // namespace detail

// Normal-ordering product. Distinct symplectic pairs commute, so the
// reordering factors pairwise; within the pair (p, d) = (x_{2l-1}, x_{2l})
// the closed form
//   d^b p^c = sum_k k! C(b,k) C(c,k) h^k p^{c-k} d^{b-k}
// gives the product of two standard monomials directly. Cost O(min(b,c))
// per pair instead of the oracle's exponential word shuffling.
inline WeylElement weyl_mul(const WeylElement& f, const WeylElement& g) {
    WeylElement::require_same_context(f, g);
    detail::check_degree_cap(f, g);
    const WeylContext& ctx = f.context();
    const int n = ctx.n();
    WeylElement out(ctx);

    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            // per-pair reorder bounds: left factor's d exponent, right's p
            std::vector<int> kmax(static_cast<std::size_t>(n));
            for (int l = 0; l < n; ++l)
                kmax[l] = std::min(ma.exps[2 * l + 1], mb.exps[2 * l]);

            ParamPoly base = ca * cb;
            std::vector<int> k(static_cast<std::size_t>(n), 0);
            for (;;) {
                Rational mult(1);
                int ktot = 0;
                for (int l = 0; l < n; ++l) {
                    if (k[l] == 0) continue;
                    ktot += k[l];
                    mult *= factorial(static_cast<unsigned long>(k[l])) *
                            binomial(ma.exps[2 * l + 1], k[l]) *
                            binomial(mb.exps[2 * l], k[l]);
                }

                Monomial m(ctx.vars());
                for (int l = 0; l < n; ++l) {
                    m.exps[2 * l] = ma.exps[2 * l] + mb.exps[2 * l] - k[l];
                    m.exps[2 * l + 1] = ma.exps[2 * l + 1] + mb.exps[2 * l + 1] - k[l];
                }

                ParamPoly c = base * mult;
                if (ktot > 0)
                    c = ctx.symbolic() ? c.times_param_pow(ktot)
                                       : c * ctx.q().pow(ktot);
                out.add_term(m, c);

                // odometer over the multi-index k
                int l = 0;
                while (l < n && k[l] == kmax[l]) k[l++] = 0;
                if (l == n) break;
                ++k[l];
            }
        }
    }
    return out;
}

// Naive normal ordering by repeated single-relation application
//   x_j x_i -> x_i x_j + [pair ? h : 0]   (j > i)
// on concatenated words. Exponential; exists as the independent correctness
// oracle for weyl_mul and as the benchmark baseline. Keep degrees small.
inline WeylElement rewrite_oracle(const WeylElement& f, const WeylElement& g) {
    WeylElement::require_same_context(f, g);
    detail::check_degree_cap(f, g);
    const WeylContext& ctx = f.context();
    const ParamPoly rel = ctx.relation_constant();
    WeylElement out(ctx);

    auto word_of = [](const Monomial& m) {
        std::vector<int> w;  // 0-based generator indices, ascending
        for (int i = 0; i < m.nvars(); ++i)
            for (int e = 0; e < m.exps[static_cast<std::size_t>(i)]; ++e) w.push_back(i);
        return w;
    };

    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            std::vector<int> start = word_of(ma);
            const std::vector<int> tail = word_of(mb);
            start.insert(start.end(), tail.begin(), tail.end());

            std::vector<std::pair<std::vector<int>, ParamPoly>> stack;
            stack.emplace_back(std::move(start), ca * cb);

            while (!stack.empty()) {
                auto [w, c] = std::move(stack.back());
                stack.pop_back();

                std::size_t pos = 0;
                bool sorted = true;
                for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                    if (w[i] > w[i + 1]) {
                        pos = i;
                        sorted = false;
                        break;
                    }
                }

                if (sorted) {
                    Monomial m(ctx.vars());
                    for (int gi : w) m.exps[static_cast<std::size_t>(gi)] += 1;
                    out.add_term(m, c);
                    continue;
                }

                // the deleted-pair branch first: x_{2l} x_{2l-1} contributes h
                if (w[pos] % 2 == 1 && w[pos + 1] == w[pos] - 1) {
                    std::vector<int> shorter;
                    shorter.reserve(w.size() - 2);
                    shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(pos));
                    shorter.insert(shorter.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
                    stack.emplace_back(std::move(shorter), c * rel);
                }
                std::swap(w[pos], w[pos + 1]);
                stack.emplace_back(std::move(w), std::move(c));
            }
        }
    }
    return out;
}

inline WeylElement commutator(const WeylElement& f, const WeylElement& g) {
    return weyl_mul(f, g) - weyl_mul(g, f);
}

// Evaluate coefficients at h = q, landing in the numeric deformation.
inline WeylElement specialize(const WeylElement& f, const Rational& q) {
    if (f.context().mode() == AlgebraMode::numeric)
        fail(errc::context_mismatch, "specialize needs a symbolic context");
    if (q.is_zero()) fail(errc::zero_input, "specialize needs q != 0");
    WeylElement out(WeylContext::numeric(f.context().n(), q));
    for (const auto& [m, c] : f.terms())
        out.add_term(m, ParamPoly::constant(c.eval(q)));
    return out;
}

// C(2n + d, 2n): number of standard monomials of total degree <= d in 2n
// variables, unity included.
inline std::uint64_t standard_monomial_count(int n, int d) {
    if (n < 1) fail(errc::index_out_of_range, "count needs n >= 1");
    if (d < 0) return 0;
    mpz_t b;
    mpz_init(b);
    mpz_bin_uiui(b, static_cast<unsigned long>(2 * n + d),
                 static_cast<unsigned long>(2 * n));
    if (!mpz_fits_ulong_p(b)) {
        mpz_clear(b);
        fail(errc::overflow, "monomial count exceeds 64 bits");
    }
    std::uint64_t out = mpz_get_ui(b);
    mpz_clear(b);
    return out;
}

// nu_{2j} = h * d/dx_{2j-1}, the derivation twisting the j-th pair.
inline WeylElement apply_derivation_nu(const WeylElement& f, int j) {
    if (f.context().mode() != AlgebraMode::formal_t)
        fail(errc::context_mismatch, "nu lives on the formal-t algebra");
    if (j < 1 || j > f.context().n())
        fail(errc::index_out_of_range, "pair index out of range");
    const std::size_t slot = static_cast<std::size_t>(2 * j - 2);  // x_{2j-1}
    WeylElement out(f.context());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exps[slot];
        if (e == 0) continue;
        Monomial d = m;
        d.exps[slot] = e - 1;
        out.add_term(d, (c * Rational(e)).times_param_pow(1));
    }
    return out;
}

}  // namespace semiweyl
