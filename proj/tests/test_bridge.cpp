#include <doctest.h>

#include "semiweyl/bridge.hpp"
#include "semiweyl/parse.hpp"
#include "semiweyl/random_gen.hpp"
#include "semiweyl/text.hpp"

using namespace semiweyl;

TEST_CASE("A-hat membership") {
    WeylContext fam = WeylContext::family_q(1);
    CHECK(in_A_hat(parse_weyl("x2 + h*x1^2", fam)));
    CHECK_FALSE(in_A_hat(parse_weyl("h^-1*x2", fam)));
    CHECK(in_A_hat(WeylElement::zero(fam)));
    CHECK_THROWS_AS((void)in_A_hat(WeylElement::one(WeylContext::weyl(1))), error);
}

TEST_CASE("gamma-hat on the pinned examples") {
    WeylContext fam = WeylContext::family_q(2);
    CHECK(to_string(gamma_hat(parse_weyl("x2 + h*x1^2", fam))) == "x2");
    for (int i = 1; i <= 4; ++i)
        CHECK(gamma_hat(WeylElement::generator(fam, i)) == PoissonElement::generator(2, i));
    CHECK(gamma_hat(parse_weyl("3 + h^2", fam)) == PoissonElement::constant(2, Rational(3)));
    CHECK_THROWS_WITH_AS((void)gamma_hat(parse_weyl("h^-1*x2", fam)),
                         doctest::Contains("NotInAHat"), error);
}

TEST_CASE("gamma-hat is multiplicative on A-hat") {
    detail::SplitMix64 rng{41};
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng.below(2));
        WeylContext fam = WeylContext::family_q(n);
        WeylElement f = random_weyl_element(rng, fam, 4, 3, 8, 0, 2);
        WeylElement g = random_weyl_element(rng, fam, 4, 3, 8, 0, 2);
        REQUIRE(gamma_hat(weyl_mul(f, g)) == gamma_hat(f) * gamma_hat(g));
    }
}

TEST_CASE("gamma-hat on formal elements is coefficientwise h->0") {
    detail::SplitMix64 rng{42};
    WeylContext an = WeylContext::formal_t(1);
    for (int it = 0; it < 50; ++it) {
        WeylElement f = random_weyl_element(rng, an, 4, 3, 8);
        PoissonElement direct(1);
        for (const auto& [m, c] : f.terms()) direct.add_term(m, c.eval(Rational(0)));
        CHECK(gamma_hat(f) == direct);
    }
}

TEST_CASE("semiclassical bracket matches the symplectic bracket") {
    CHECK(semiclassical_bracket(parse_poisson("x2", 1), parse_poisson("x1", 1)) ==
          PoissonElement::one(1));
    CHECK(to_string(semiclassical_bracket(parse_poisson("x1^2", 1),
                                          parse_poisson("x2", 1))) == "-2*x1");
    CHECK(semiclassical_bracket(parse_poisson("x1", 2), parse_poisson("x3", 2)).is_zero());

    detail::SplitMix64 rng{43};
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng.below(2));
        PoissonElement a = random_poisson_element(rng, n, 4, 3, 8);
        PoissonElement b = random_poisson_element(rng, n, 4, 3, 8);
        REQUIRE(semiclassical_bracket(a, b) == poisson_bracket(a, b));
    }
}

TEST_CASE("semiclassical bracket does not depend on the lift") {
    detail::SplitMix64 rng{44};
    for (int it = 0; it < 100; ++it) {
        int n = 1 + static_cast<int>(rng.below(2));
        WeylContext an = WeylContext::formal_t(n);
        PoissonElement a = random_poisson_element(rng, n, 3, 3, 6);
        PoissonElement b = random_poisson_element(rng, n, 3, 3, 6);
        // perturb both lifts by h * (random element)
        WeylElement fa = lift_to_formal(a) +
                         random_weyl_element(rng, an, 3, 2, 5).scaled(ParamPoly::param());
        WeylElement fb = lift_to_formal(b) +
                         random_weyl_element(rng, an, 3, 2, 5).scaled(ParamPoly::param());
        REQUIRE(semiclassical_bracket_lifts(fa, fb) == poisson_bracket(a, b));
    }
}

TEST_CASE("psi and its inverse") {
    WeylContext fam = WeylContext::family_q(1);
    CHECK(to_string(psi(parse_weyl("x2", fam))) == "h*x2");
    CHECK(psi(parse_weyl("x1", fam)) == parse_weyl("x1", fam));
    CHECK(to_string(psi_inverse(parse_weyl("x1*x2^2", fam))) == "h^-2*x1*x2^2");

    detail::SplitMix64 rng{45};
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng.below(2));
        WeylContext ctx = WeylContext::family_q(n);
        WeylElement f = random_weyl_element(rng, ctx, 4, 4, 8, -2, 2);
        REQUIRE(psi_inverse(psi(f)) == f);
        REQUIRE(psi(psi_inverse(f)) == f);
    }

    // psi turns the family relation into the rescaled one
    WeylElement lhs = psi(commutator(parse_weyl("x2", fam), parse_weyl("x1", fam)));
    CHECK(lhs == WeylElement::constant(fam, ParamPoly::param()));
}

TEST_CASE("fixed-q isomorphism onto the Weyl algebra") {
    WeylContext aq2 = WeylContext::numeric(1, Rational(2));
    CHECK(to_string(iso_Aq_to_Wn(parse_weyl("x2", aq2), Rational(2))) == "2*x2");
    CHECK(to_string(iso_Aq_to_Wn(parse_weyl("x2*x1", aq2), Rational(2))) == "2*x1*x2 + 2");

    // q = 1 is the identity
    WeylContext w1 = WeylContext::weyl(1);
    WeylElement f = parse_weyl("x2^2*x1 + 3", w1);
    CHECK(iso_Aq_to_Wn(f, Rational(1)) == f);

    detail::SplitMix64 rng{46};
    for (long num : {1L, 2L, -1L}) {
        for (long den : {1L, 2L}) {
            Rational q(num, den);
            WeylContext ctx = WeylContext::numeric(1, q);
            for (int it = 0; it < 40; ++it) {
                WeylElement a = random_weyl_element(rng, ctx, 4, 3, 8);
                WeylElement b = random_weyl_element(rng, ctx, 4, 3, 8);
                REQUIRE(iso_Aq_to_Wn(weyl_mul(a, b), q) ==
                        weyl_mul(iso_Aq_to_Wn(a, q), iso_Aq_to_Wn(b, q)));
            }
            // relation goes to q * [x2,x1] in Wn
            WeylElement rel = commutator(WeylElement::generator(ctx, 2),
                                         WeylElement::generator(ctx, 1));
            CHECK(iso_Aq_to_Wn(rel, q) ==
                  WeylElement::constant(WeylContext::weyl(1), q));
        }
    }
    CHECK_THROWS_AS((void)iso_Aq_to_Wn(f, Rational(2)), error);
}
