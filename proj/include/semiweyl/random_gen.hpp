#pragma once

#include "semiweyl/param_poly.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/rng.hpp"
#include "semiweyl/weyl.hpp"

namespace semiweyl {

// Random value generators for property tests, selftest and the benchmark.
// All deterministic off SplitMix64 seeds.

inline Rational random_rational(detail::SplitMix64& rng, long height) {
    long num = rng.range(-height, height);
    long den = rng.range(1, 4);
    return Rational(num, den);
}

inline ParamPoly random_param_poly(detail::SplitMix64& rng, int min_exp, int max_exp,
                                   long height, int max_terms = 3) {
    ParamPoly p;
    int nterms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
    for (int t = 0; t < nterms; ++t)
        p.add_term(static_cast<int>(rng.range(min_exp, max_exp)),
                   random_rational(rng, height));
    return p;
}

inline ParamPoly random_nonzero_param_poly(detail::SplitMix64& rng, int min_exp,
                                           int max_exp, long height) {
    for (;;) {
        ParamPoly p = random_param_poly(rng, min_exp, max_exp, height);
        if (!p.is_zero()) return p;
    }
}

inline WeylElement random_weyl_element(detail::SplitMix64& rng, const WeylContext& ctx,
                                       int max_deg, int max_terms, long height,
                                       int coeff_min_exp = 0, int coeff_max_exp = 2) {
    WeylElement f(ctx);
    int nterms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
    for (int t = 0; t < nterms; ++t) {
        Monomial m(ctx.vars());
        int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
        for (int i = 0; i < ctx.vars() && budget > 0; ++i) {
            int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1)));
            m.exps[static_cast<std::size_t>(i)] = e;
            budget -= e;
        }
        ParamPoly c = ctx.mode() == AlgebraMode::numeric
                          ? ParamPoly::constant(random_rational(rng, height))
                          : random_param_poly(rng,
                                              ctx.mode() == AlgebraMode::formal_t
                                                  ? std::max(0, coeff_min_exp)
                                                  : coeff_min_exp,
                                              coeff_max_exp, height);
        f.add_term(m, c);
    }
    return f;
}

inline PoissonElement random_poisson_element(detail::SplitMix64& rng, int n, int max_deg,
                                             int max_terms, long height) {
    return detail::random_poisson(rng, n, max_deg, max_terms, height);
}

}  // namespace semiweyl
