#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "semiweyl/audit.hpp"
#include "semiweyl/bridge.hpp"
#include "semiweyl/morphism.hpp"
#include "semiweyl/parse.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/random_gen.hpp"
#include "semiweyl/text.hpp"
#include "semiweyl/weyl.hpp"

namespace semiweyl {

// Randomized invariant suite behind `semiweyl selftest`. Each group prints
// one line; returns true iff everything held.
inline bool run_selftest(std::ostream& os, std::uint64_t seed = 0x5e1f7e57ULL) {
    bool all_ok = true;
    auto group = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const error& e) {
            os << "[fail] " << name << " (exception: " << e.what() << ")\n";
            all_ok = false;
            return;
        }
        os << (ok ? "[ ok ] " : "[fail] ") << name << "\n";
        if (!ok) all_ok = false;
    };

    group("scalar ring axioms + eval homomorphism", [&] {
        detail::SplitMix64 rng{seed ^ 1};
        for (int it = 0; it < 150; ++it) {
            ParamPoly a = random_param_poly(rng, -3, 4, 8);
            ParamPoly b = random_param_poly(rng, -3, 4, 8);
            ParamPoly c = random_param_poly(rng, -3, 4, 8);
            if ((a + b) * c != a * c + b * c) return false;
            if (a * b != b * a || (a * b) * c != a * (b * c)) return false;
            Rational v = random_rational(rng, 6);
            if (v.is_zero()) v = Rational(1);
            if ((a * b).eval(v) != a.eval(v) * b.eval(v)) return false;
        }
        for (int it = 0; it < 80; ++it) {
            ParamPoly a = random_param_poly(rng, 0, 4, 8);
            ParamPoly b = random_param_poly(rng, 0, 4, 8);
            if ((a * b).shifted() != a.shifted() * b.shifted()) return false;
            if (a.shifted().eval(Rational(0)) != a.eval(Rational(1))) return false;
        }
        return true;
    });

    group("weyl_mul vs rewrite_oracle + associativity", [&] {
        detail::SplitMix64 rng{seed ^ 2};
        for (int it = 0; it < 120; ++it) {
            WeylContext ctx = it % 2 ? WeylContext::formal_t(2) : WeylContext::weyl(1);
            WeylElement f = random_weyl_element(rng, ctx, 4, 3, 10);
            WeylElement g = random_weyl_element(rng, ctx, 4, 3, 10);
            if (weyl_mul(f, g) != rewrite_oracle(f, g)) return false;
        }
        for (int it = 0; it < 40; ++it) {
            WeylContext ctx = WeylContext::family_q(1);
            WeylElement f = random_weyl_element(rng, ctx, 3, 2, 6, -1, 2);
            WeylElement g = random_weyl_element(rng, ctx, 3, 2, 6, -1, 2);
            WeylElement h = random_weyl_element(rng, ctx, 3, 2, 6, -1, 2);
            if (weyl_mul(weyl_mul(f, g), h) != weyl_mul(f, weyl_mul(g, h))) return false;
        }
        return true;
    });

    group("defining relations + parameter regularity", [&] {
        detail::SplitMix64 rng{seed ^ 3};
        for (int n = 1; n <= 3; ++n) {
            WeylContext ctx = WeylContext::formal_t(n);
            for (int j = 2; j <= 2 * n; ++j) {
                for (int i = 1; i < j; ++i) {
                    WeylElement comm = commutator(WeylElement::generator(ctx, j),
                                                  WeylElement::generator(ctx, i));
                    bool is_pair = j % 2 == 0 && i == j - 1;
                    WeylElement want = is_pair
                                           ? WeylElement::constant(ctx, ParamPoly::param())
                                           : WeylElement::zero(ctx);
                    if (comm != want) return false;
                }
            }
        }
        WeylContext ctx = WeylContext::formal_t(2);
        for (int it = 0; it < 40; ++it) {
            WeylElement f = random_weyl_element(rng, ctx, 3, 3, 8);
            WeylElement g = random_weyl_element(rng, ctx, 3, 3, 8);
            WeylElement hf = f.scaled(ParamPoly::param());
            if (f.is_zero() != hf.is_zero()) return false;
            if (hf == g.scaled(ParamPoly::param()) && f != g) return false;
        }
        return true;
    });

    group("poisson bracket axioms", [&] {
        detail::SplitMix64 rng{seed ^ 4};
        for (int it = 0; it < 100; ++it) {
            int n = 1 + static_cast<int>(rng.below(2));
            PoissonElement f = random_poisson_element(rng, n, 3, 3, 6);
            PoissonElement g = random_poisson_element(rng, n, 3, 3, 6);
            PoissonElement h = random_poisson_element(rng, n, 3, 3, 6);
            if (poisson_bracket(f, g) != -poisson_bracket(g, f)) return false;
            if (poisson_bracket(f * g, h) !=
                f * poisson_bracket(g, h) + poisson_bracket(f, h) * g)
                return false;
            PoissonElement jac = poisson_bracket(f, poisson_bracket(g, h)) +
                                 poisson_bracket(g, poisson_bracket(h, f)) +
                                 poisson_bracket(h, poisson_bracket(f, g));
            if (!jac.is_zero()) return false;
        }
        return true;
    });

    group("semiclassical limit matches symplectic bracket", [&] {
        detail::SplitMix64 rng{seed ^ 5};
        for (int it = 0; it < 80; ++it) {
            int n = 1 + static_cast<int>(rng.below(2));
            PoissonElement a = random_poisson_element(rng, n, 4, 3, 8);
            PoissonElement b = random_poisson_element(rng, n, 4, 3, 8);
            if (semiclassical_bracket(a, b) != poisson_bracket(a, b)) return false;
        }
        return true;
    });

    group("gamma-hat multiplicative, psi bijective, iso multiplicative", [&] {
        detail::SplitMix64 rng{seed ^ 6};
        WeylContext fam = WeylContext::family_q(1);
        for (int it = 0; it < 60; ++it) {
            WeylElement f = random_weyl_element(rng, fam, 3, 3, 6, 0, 2);
            WeylElement g = random_weyl_element(rng, fam, 3, 3, 6, 0, 2);
            if (gamma_hat(weyl_mul(f, g)) != gamma_hat(f) * gamma_hat(g)) return false;
            WeylElement lau = random_weyl_element(rng, fam, 3, 3, 6, -2, 2);
            if (psi_inverse(psi(lau)) != lau || psi(psi_inverse(lau)) != lau) return false;
        }
        for (long qi : {1L, 2L, -1L}) {
            Rational q(qi);
            WeylContext ctx = WeylContext::numeric(1, q);
            for (int it = 0; it < 20; ++it) {
                WeylElement f = random_weyl_element(rng, ctx, 3, 3, 6);
                WeylElement g = random_weyl_element(rng, ctx, 3, 3, 6);
                if (iso_Aq_to_Wn(weyl_mul(f, g), q) !=
                    weyl_mul(iso_Aq_to_Wn(f, q), iso_Aq_to_Wn(g, q)))
                    return false;
            }
        }
        return true;
    });

    group("morphism transport path agreement + varphi homomorphism law", [&] {
        std::vector<GenMorphism> corpus = tame_corpus(1, 0xfeedULL, 12);
        for (const auto& s : corpus) {
            if (s.validation() != Validation::valid) return false;
            psi_transport(s);  // throws on path disagreement
            if (!verify_inverse(s, from_word(s.context(), invert_word(s.word()))))
                return false;
        }
        std::vector<GenMorphism> pool = ahat_corpus(1, 0xbeefULL, 8);
        for (const auto& a : pool) {
            if (varphi(a).validation() != Validation::valid) return false;
            for (const auto& b : pool)
                if (varphi(compose(a, b)) != compose(varphi(a), varphi(b))) return false;
        }
        return true;
    });

    group("render/parse round-trip", [&] {
        detail::SplitMix64 rng{seed ^ 7};
        for (int it = 0; it < 60; ++it) {
            WeylContext ctx = it % 3 == 0   ? WeylContext::weyl(1)
                              : it % 3 == 1 ? WeylContext::formal_t(2)
                                            : WeylContext::family_q(1);
            WeylElement f = random_weyl_element(rng, ctx, 4, 4, 8, -2, 2);
            std::string text = to_string(f);
            if (to_string(parse_weyl(text, ctx)) != text) return false;
            PoissonElement p = random_poisson_element(rng, 2, 4, 4, 8);
            std::string ptext = to_string(p);
            if (to_string(parse_poisson(ptext, 2)) != ptext) return false;
        }
        return true;
    });

    return all_ok;
}

}  // namespace semiweyl
