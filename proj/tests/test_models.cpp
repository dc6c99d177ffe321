#include <doctest.h>

#include "gkm/checks.hpp"
#include "gkm/models.hpp"
#include "oracles.hpp"

using namespace gkm;

TEST_CASE("t_lambda is the inert one-element crystal") {
    auto datum = testing::sl2_datum();
    TLambdaCrystal t(datum, {2});
    Element el = t.element();
    CHECK(t.wt(el) == Weight({2}, {0}));
    CHECK(t.phi(0, el).is_neg_inf());
    CHECK(t.eps(0, el).is_neg_inf());
    CHECK(!t.f(0, el).has_value());
    CHECK(!t.e(0, el).has_value());

    std::vector<Element> frag{el};
    CHECK(check_axioms(t, frag).passed());

    CHECK_THROWS_AS(TLambdaCrystal(datum, {-1}), Error);
}

TEST_CASE("c crystal has zero weight and statistics") {
    auto datum = testing::imaginary_datum(-2);
    CCrystal c(datum);
    Element el = c.element();
    CHECK(c.wt(el) == Weight::zero(1));
    CHECK(c.eps(0, el) == ExtInt(0));
    CHECK(c.phi(0, el) == ExtInt(0));
    CHECK(!c.e(0, el).has_value());
    CHECK(!c.f(0, el).has_value());

    std::vector<Element> frag{el};
    CHECK(check_axioms(c, frag).passed());
}

TEST_CASE("real elementary letters") {
    auto datum = testing::sl2_datum();
    ElementaryCrystal b(datum, 0);
    Element l = b.letter(-3);
    CHECK(b.eps(0, l) == ExtInt(3));
    CHECK(b.phi(0, l) == ExtInt(-3));
    CHECK(pairing(*datum, b.wt(l), 0) == -6);
    CHECK(*b.f(0, l) == b.letter(-4));
    CHECK(*b.e(0, l) == b.letter(-2));
    // unrestricted above zero for real indices
    CHECK(*b.e(0, b.letter(0)) == b.letter(1));
}

TEST_CASE("imaginary elementary letters") {
    auto datum = testing::imaginary_datum(-2);
    ElementaryCrystal b(datum, 0);
    CHECK(b.phi(0, b.letter(-1)) == ExtInt(2));
    CHECK(b.eps(0, b.letter(-1)) == ExtInt(0));
    CHECK(!b.e(0, b.letter(0)).has_value());
    CHECK(*b.e(0, b.letter(-2)) == b.letter(-1));
    CHECK(*b.f(0, b.letter(0)) == b.letter(-1));
    CHECK_THROWS_AS(b.letter(1), Error);

    // phi stays nonnegative on the admissible range
    for (long long n = 0; n >= -6; --n) CHECK(b.phi(0, b.letter(n)) >= ExtInt(0));
}

TEST_CASE("elementary crystals pass the axiom suite, including imaginary increments") {
    for (long long aii : {2LL, 0LL, -2LL}) {
        auto datum = testing::imaginary_datum(aii); // {2} gives the real chain
        ElementaryCrystal b(datum, 0);
        std::vector<Element> frag;
        for (long long n = 0; n >= -5; --n) frag.push_back(b.letter(n));
        if (aii == 2)
            for (long long n = 1; n <= 3; ++n) frag.push_back(b.letter(n));
        auto report = check_axioms(b, frag);
        INFO("a_ii = ", aii, ": ", report.summary());
        CHECK(report.passed());
    }
}

TEST_CASE("letters over a rank-two datum vanish in the other direction") {
    auto datum = testing::mixed_datum(0);
    ElementaryCrystal b1(datum, 1);
    Element l = b1.letter(-2);
    CHECK(b1.eps(0, l).is_neg_inf());
    CHECK(b1.phi(0, l).is_neg_inf());
    CHECK(!b1.e(0, l).has_value());
    CHECK(!b1.f(0, l).has_value());
    std::vector<Element> frag{b1.letter(0), b1.letter(-1), b1.letter(-2)};
    CHECK(check_axioms(b1, frag).passed());
}
