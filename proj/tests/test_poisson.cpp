#include <doctest.h>

#include "semiweyl/parse.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/random_gen.hpp"
#include "semiweyl/text.hpp"

using namespace semiweyl;

namespace {

PoissonElement pe(int n, const std::string& src) { return parse_poisson(src, n); }

}  // namespace

TEST_CASE("bracket on generators") {
    CHECK(poisson_bracket(pe(1, "x2"), pe(1, "x1")) == PoissonElement::one(1));
    CHECK(poisson_bracket(pe(2, "x1"), pe(2, "x3")).is_zero());
    CHECK(to_string(poisson_bracket(pe(1, "x1^2"), pe(1, "x2"))) == "-2*x1");
}

TEST_CASE("partial derivatives") {
    CHECK(to_string(partial(pe(1, "x1^2*x2"), 1)) == "2*x1*x2");
    CHECK(partial(pe(1, "x2"), 1).is_zero());
    CHECK(to_string(partial(pe(1, "x1*x2^4"), 2)) == "4*x1*x2^3");
    CHECK_THROWS_AS((void)partial(pe(1, "x1"), 3), error);
}

TEST_CASE("bracket axioms on random triples") {
    detail::SplitMix64 rng{31};
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng.below(2));
        PoissonElement f = random_poisson_element(rng, n, 3, 3, 7);
        PoissonElement g = random_poisson_element(rng, n, 3, 3, 7);
        PoissonElement h = random_poisson_element(rng, n, 3, 3, 7);
        CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
        CHECK(poisson_bracket(f * g, h) ==
              f * poisson_bracket(g, h) + poisson_bracket(f, h) * g);
        PoissonElement jac = poisson_bracket(f, poisson_bracket(g, h)) +
                             poisson_bracket(g, poisson_bracket(h, f)) +
                             poisson_bracket(h, poisson_bracket(f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("bracket vanishes across disjoint pairs") {
    detail::SplitMix64 rng{32};
    for (int it = 0; it < 60; ++it) {
        PoissonElement f = random_poisson_element(rng, 2, 3, 3, 7);
        PoissonElement g = random_poisson_element(rng, 2, 3, 3, 7);
        // keep f on pair 1 and g on pair 2 only
        PoissonElement f1(2), g2(2);
        for (const auto& [m, c] : f.terms())
            if (m.exps[2] == 0 && m.exps[3] == 0) f1.add_term(m, c);
        for (const auto& [m, c] : g.terms())
            if (m.exps[0] == 0 && m.exps[1] == 0) g2.add_term(m, c);
        CHECK(poisson_bracket(f1, g2).is_zero());
    }
}

TEST_CASE("poisson extension verification") {
    // the tower derivation delta_2 passes
    ExtensionReport ok =
        verify_poisson_extension(DerivationSpec::zero(1), DerivationSpec::delta_pair(1, 1), 3);
    CHECK(ok.pass);
    CHECK(ok.generator_pairs_checked == 1);
    CHECK(ok.spot_checks == 20);

    // swap derivation x1 <-> x2 also satisfies the compatibility identity
    DerivationSpec swap = DerivationSpec::zero(1);
    swap.images[0] = PoissonElement::generator(1, 2);
    swap.images[1] = PoissonElement::generator(1, 1);
    CHECK(verify_poisson_extension(DerivationSpec::zero(1), swap, 3).pass);

    // the pinned counter-derivation fails with a concrete witness
    DerivationSpec bad = DerivationSpec::zero(1);
    bad.images[0] = PoissonElement::generator(1, 1);
    ExtensionReport fail_report =
        verify_poisson_extension(DerivationSpec::zero(1), bad, 3);
    CHECK_FALSE(fail_report.pass);
    REQUIRE(fail_report.violation.has_value());
    CHECK(fail_report.violation->check == "delta_compatibility");
    CHECK(fail_report.violation->instance == "x2,x1");
    CHECK(to_string(fail_report.violation->lhs) == "-1");
    CHECK(to_string(fail_report.violation->rhs) == "0");
}

TEST_CASE("delta towers pass for all pairs up to n=3") {
    for (int n = 1; n <= 3; ++n)
        for (int j = 1; j <= n; ++j)
            CHECK(verify_poisson_extension(DerivationSpec::zero(n),
                                           DerivationSpec::delta_pair(n, j), 3)
                      .pass);
}

TEST_CASE("iterated tower rebuilds the bracket table") {
    BracketTable t1 = build_iterated_bracket(1);
    CHECK(t1.matches_direct);
    CHECK(t1.at(2, 1) == PoissonElement::one(1));

    BracketTable t2 = build_iterated_bracket(2);
    CHECK(t2.matches_direct);
    CHECK(t2.at(4, 3) == PoissonElement::one(2));
    CHECK(t2.at(4, 1).is_zero());
    CHECK(t2.at(3, 2).is_zero());

    BracketTable t3 = build_iterated_bracket(3);
    CHECK(t3.matches_direct);
    CHECK(t3.entries.size() == 15);
    int nonzero = 0;
    for (const auto& [ji, v] : t3.entries)
        if (!v.is_zero()) ++nonzero;
    CHECK(nonzero == 3);
}

TEST_CASE("arity mismatches are rejected") {
    CHECK_THROWS_AS((void)poisson_bracket(pe(1, "x1"), pe(2, "x1")), error);
    DerivationSpec d = DerivationSpec::zero(1);
    d.images.pop_back();
    CHECK_THROWS_AS((void)apply_derivation(d, pe(1, "x1")), error);
}
