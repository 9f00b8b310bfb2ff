#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiweyl/config.hpp"
#include "semiweyl/error.hpp"
#include "semiweyl/monomial.hpp"
#include "semiweyl/rational.hpp"
#include "semiweyl/rng.hpp"

namespace semiweyl {

// Commutative polynomial in x1..x_{2n} over the rationals, carrying the
// symplectic bracket below. Same normal-form conventions as WeylElement.
class PoissonElement {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    explicit PoissonElement(int n) : n_(n) {
        if (n < 1) fail(errc::index_out_of_range, "poisson element needs n >= 1");
    }

    static PoissonElement zero(int n) { return PoissonElement(n); }

    static PoissonElement constant(int n, Rational c) {
        PoissonElement f(n);
        f.add_term(Monomial::unit(2 * n), std::move(c));
        return f;
    }

    static PoissonElement one(int n) { return constant(n, Rational(1)); }

    static PoissonElement generator(int n, int i) {  // 1-based
        PoissonElement f(n);
        f.add_term(Monomial::generator(2 * n, i), Rational(1));
        return f;
    }

    static PoissonElement monomial(int n, Monomial m, Rational c) {
        PoissonElement f(n);
        if (m.nvars() != 2 * n) fail(errc::arity_mismatch, "monomial arity mismatch");
        f.add_term(std::move(m), std::move(c));
        return f;
    }

    int n() const { return n_; }
    int vars() const { return 2 * n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend PoissonElement operator+(const PoissonElement& a, const PoissonElement& b) {
        require_same_arity(a, b);
        PoissonElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend PoissonElement operator-(const PoissonElement& a, const PoissonElement& b) {
        require_same_arity(a, b);
        PoissonElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    PoissonElement operator-() const {
        PoissonElement r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend PoissonElement operator*(const PoissonElement& a, const PoissonElement& b) {
        require_same_arity(a, b);
        int da = a.degree(), db = b.degree();
        if (da >= 0 && db >= 0 && da + db > degree_cap())
            fail(errc::degree_cap_exceeded,
                 "product degree " + std::to_string(da + db) + " exceeds cap " +
                     std::to_string(degree_cap()));
        PoissonElement r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    PoissonElement scaled(const Rational& c) const {
        PoissonElement r(n_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    friend bool operator==(const PoissonElement& a, const PoissonElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PoissonElement& a, const PoissonElement& b) {
        return !(a == b);
    }

    static void require_same_arity(const PoissonElement& a, const PoissonElement& b) {
        if (a.n_ != b.n_) fail(errc::arity_mismatch, "elements of different arity");
    }

private:
    int n_;
    Terms terms_;
};

// Formal partial derivative d/dx_i (1-based index).
inline PoissonElement partial(const PoissonElement& f, int i) {
    if (i < 1 || i > f.vars()) fail(errc::index_out_of_range, "variable index");
    const std::size_t slot = static_cast<std::size_t>(i - 1);
    PoissonElement out(f.n());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exps[slot];
        if (e == 0) continue;
        Monomial d = m;
        d.exps[slot] = e - 1;
        out.add_term(d, c * Rational(e));
    }
    return out;
}

// {f,g} = sum_i ( -df/dx_{2i-1} dg/dx_{2i} + dg/dx_{2i-1} df/dx_{2i} )
inline PoissonElement poisson_bracket(const PoissonElement& f, const PoissonElement& g) {
    PoissonElement::require_same_arity(f, g);
    PoissonElement out(f.n());
    for (int i = 1; i <= f.n(); ++i) {
        out = out - partial(f, 2 * i - 1) * partial(g, 2 * i);
        out = out + partial(g, 2 * i - 1) * partial(f, 2 * i);
    }
    return out;
}

// A derivation given by its generator images, extended by Leibniz.
struct DerivationSpec {
    int n = 1;
    std::vector<PoissonElement> images;  // image of x_i at index i-1, size 2n

    static DerivationSpec zero(int n) {
        DerivationSpec d{n, {}};
        for (int i = 0; i < 2 * n; ++i) d.images.push_back(PoissonElement::zero(n));
        return d;
    }

    // delta_{2j}: x_{2j-1} -> 1, everything else -> 0.
    static DerivationSpec delta_pair(int n, int j) {
        if (j < 1 || j > n) fail(errc::index_out_of_range, "pair index");
        DerivationSpec d = zero(n);
        d.images[static_cast<std::size_t>(2 * j - 2)] = PoissonElement::one(n);
        return d;
    }

    void check_arity() const {
        if (static_cast<int>(images.size()) != 2 * n)
            fail(errc::arity_mismatch, "derivation needs 2n generator images");
        for (const auto& img : images)
            if (img.n() != n) fail(errc::arity_mismatch, "derivation image arity");
    }
};

inline PoissonElement apply_derivation(const DerivationSpec& d, const PoissonElement& f) {
    d.check_arity();
    if (f.n() != d.n) fail(errc::arity_mismatch, "derivation/element arity");
    PoissonElement out(f.n());
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i < f.vars(); ++i) {
            int e = m.exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Monomial rest = m;
            rest.exps[static_cast<std::size_t>(i)] = e - 1;
            out = out + d.images[static_cast<std::size_t>(i)] *
                            PoissonElement::monomial(f.n(), rest, c * Rational(e));
        }
    }
    return out;
}

struct ExtensionViolation {
    std::string check;  // "alpha_poisson" or "delta_compatibility"
    std::string instance;
    PoissonElement lhs;
    PoissonElement rhs;
};

struct ExtensionReport {
    bool pass = true;
    std::optional<ExtensionViolation> violation;
    int generator_pairs_checked = 0;
    int spot_checks = 0;
};

namespace detail {

inline PoissonElement random_poisson(SplitMix64& rng, int n, int max_deg, int nterms,
                                     long height) {
    PoissonElement f(n);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(2 * n);
        int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
        for (int i = 0; i < 2 * n && budget > 0; ++i) {
            int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1)));
            m.exps[static_cast<std::size_t>(i)] = e;
            budget -= e;
        }
        long num = rng.range(-height, height);
        long den = rng.range(1, 4);
        f.add_term(m, Rational(num, den));
    }
    return f;
}

}  // namespace detail

// Checks that (alpha, delta) generate a Poisson polynomial extension:
//  (i)  alpha({a,b}) = {alpha(a),b} + {a,alpha(b)}
//  (ii) delta({a,b}) - {delta(a),b} - {a,delta(b)} = alpha(a)delta(b) - delta(a)alpha(b)
// Both sides are biderivations in (a,b), so generator pairs decide the
// identities; a handful of random product pairs is checked on top.
inline ExtensionReport verify_poisson_extension(const DerivationSpec& alpha,
                                                const DerivationSpec& delta,
                                                int degree_cap_spot,
                                                std::uint64_t seed = 0x5eedULL) {
    alpha.check_arity();
    delta.check_arity();
    if (alpha.n != delta.n) fail(errc::arity_mismatch, "alpha/delta arity");
    const int n = alpha.n;

    ExtensionReport report;
    auto check_pair = [&](const PoissonElement& a, const PoissonElement& b,
                          const std::string& label) {
        PoissonElement br = poisson_bracket(a, b);

        PoissonElement alhs = apply_derivation(alpha, br);
        PoissonElement arhs = poisson_bracket(apply_derivation(alpha, a), b) +
                              poisson_bracket(a, apply_derivation(alpha, b));
        if (alhs != arhs) {
            report.pass = false;
            report.violation = ExtensionViolation{"alpha_poisson", label, alhs, arhs};
            return false;
        }

        PoissonElement dlhs = apply_derivation(delta, br) -
                              poisson_bracket(apply_derivation(delta, a), b) -
                              poisson_bracket(a, apply_derivation(delta, b));
        PoissonElement drhs =
            apply_derivation(alpha, a) * apply_derivation(delta, b) -
            apply_derivation(delta, a) * apply_derivation(alpha, b);
        if (dlhs != drhs) {
            report.pass = false;
            report.violation = ExtensionViolation{"delta_compatibility", label, dlhs, drhs};
            return false;
        }
        return true;
    };

    for (int j = 2; j <= 2 * n; ++j) {
        for (int i = 1; i < j; ++i) {
            ++report.generator_pairs_checked;
            if (!check_pair(PoissonElement::generator(n, j),
                            PoissonElement::generator(n, i),
                            "x" + std::to_string(j) + ",x" + std::to_string(i)))
                return report;
        }
    }

    detail::SplitMix64 rng{seed};
    int max_deg = std::min(3, degree_cap_spot);
    for (int s = 0; s < 20; ++s) {
        ++report.spot_checks;
        PoissonElement a = detail::random_poisson(rng, n, max_deg, 3, 5);
        PoissonElement b = detail::random_poisson(rng, n, max_deg, 3, 5);
        if (!check_pair(a, b, "spot#" + std::to_string(s))) return report;
    }
    return report;
}

struct BracketTable {
    int n = 1;
    // {x_j, x_i} for j > i, keyed (j, i)
    std::map<std::pair<int, int>, PoissonElement> entries;
    bool matches_direct = false;

    const PoissonElement& at(int j, int i) const {
        auto it = entries.find({j, i});
        if (it == entries.end()) fail(errc::index_out_of_range, "no such pair");
        return it->second;
    }
};

// Rebuilds the bracket from the iterated tower k[x1][x2;d2]_p[x3]_p[x4;d4]_p...
// (adjoin x_m with alpha = 0 and, for even m, delta_m = d/dx_{m-1} on the
// subalgebra below) and verifies it against poisson_bracket on generators.
inline BracketTable build_iterated_bracket(int n) {
    if (n < 1) fail(errc::index_out_of_range, "n >= 1");
    BracketTable table;
    table.n = n;
    for (int m = 2; m <= 2 * n; ++m) {
        for (int i = 1; i < m; ++i) {
            // {x_m, x_i} = alpha_m(x_i) x_m + delta_m(x_i)
            PoissonElement v = (m % 2 == 0 && i == m - 1) ? PoissonElement::one(n)
                                                          : PoissonElement::zero(n);
            table.entries.emplace(std::make_pair(m, i), std::move(v));
        }
    }
    table.matches_direct = true;
    for (const auto& [ji, v] : table.entries) {
        PoissonElement direct = poisson_bracket(PoissonElement::generator(n, ji.first),
                                                PoissonElement::generator(n, ji.second));
        if (direct != v) {
            table.matches_direct = false;
            break;
        }
    }
    return table;
}

}  // namespace semiweyl
