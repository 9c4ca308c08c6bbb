#include "doctest.h"

#include "knots/clasp.hpp"

#include <random>

using namespace knots;

namespace {
Laurent z(const char* s) { return parse_laurent(s, "z"); }
}  // namespace

TEST_CASE("shibuya lower bound") {
    CHECK(shibuya_lower(2, 2) == 2);
    CHECK(shibuya_lower(0, 0) == 0);
    CHECK(shibuya_lower(4, 4) == 4);
    CHECK_THROWS_AS(shibuya_lower(-1, 0), std::invalid_argument);
}

TEST_CASE("genus-2 shape extraction") {
    CHECK(conway_genus2_of(z("-5z^4 + 2z^2 + 1")) == ConwayGenus2{-5, 2});
    CHECK(conway_genus2_of(Laurent::one()) == ConwayGenus2{0, 0});
    CHECK(conway_genus2_of(z("-z^4 + 1")) == ConwayGenus2{-1, 0});
    CHECK_THROWS_AS(conway_genus2_of(z("z^6 + 1")), std::invalid_argument);
    CHECK_THROWS_AS(conway_genus2_of(z("z^4 + 2")), std::invalid_argument);
    CHECK_THROWS_AS(conway_genus2_of(z("z^3 + 1")), std::invalid_argument);
}

TEST_CASE("mod-8 obstruction") {
    CHECK(mod8_obstruction({-5, 2}));
    CHECK(!mod8_obstruction({-1, 0}));
    CHECK(mod8_obstruction({3, 2}));
    CHECK(!mod8_obstruction({3, 4}));
    CHECK(mod8_obstruction({11, -2}));
}

TEST_CASE("one-clasp shape") {
    CHECK(one_clasp_form(z("z^2 + 1")) == BigInt(1));
    CHECK(!one_clasp_form(z("-z^4 + 1")).has_value());
    CHECK(one_clasp_form(Laurent::one()) == BigInt(0));
    CHECK(!one_clasp_form(z("z^2 + 2")).has_value());
}

TEST_CASE("lemma 2.1 closed form") {
    CHECK(lemma21_closed_form(0, 0, 0, +1, 0) == Laurent::one());
    CHECK(lemma21_closed_form(1, -1, 0, +1, 0) == z("-z^4 + 1"));
    CHECK(lemma21_closed_form(1, 1, 0, +1, 0) == z("z^4 + 2z^2 + 1"));
}

TEST_CASE("lemma 2.1 matrix matches its closed form") {
    CHECK(conway_from_seifert(lemma21_matrix(0, 0, 0, 1, 1, 0)) == Laurent::one());
    CHECK(conway_from_seifert(lemma21_matrix(-1, 0, 0, 1, 1, 0)) == z("z^2 + 1"));
    CHECK(conway_from_seifert(lemma21_matrix(-1, 0, -1, 1, 1, 0)) ==
          z("z^4 + 2z^2 + 1"));

    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> a(-50, 50), s(0, 1);
    for (int i = 0; i < 300; ++i) {
        const long long a11 = a(rng), a12 = a(rng), a22 = a(rng);
        const int e1 = s(rng) ? 1 : -1, e2 = s(rng) ? 1 : -1, delta = s(rng);
        CHECK(conway_from_seifert(lemma21_matrix(a11, a12, a22, e1, e2, delta)) ==
              lemma21_closed_form(-e1 * a11, -e2 * a22, a12, -e1 * e2, delta));
    }
}

TEST_CASE("two-clasp realizability: pinned answers") {
    auto w = two_clasp_realizable({-1, 0});
    REQUIRE(w.has_value());
    CHECK(*w == TwoClaspWitness{1, -1, 0, +1, 0});

    CHECK(!two_clasp_realizable({-5, 2}).has_value());

    auto zero = two_clasp_realizable({0, 0});
    REQUIRE(zero.has_value());
    CHECK(*zero == TwoClaspWitness{0, 0, 0, +1, 0});
}

TEST_CASE("witness soundness") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> m(-40, 40);
    for (int i = 0; i < 500; ++i) {
        ConwayGenus2 c{m(rng), m(rng)};
        if (auto w = two_clasp_realizable(c)) {
            Laurent expect;
            expect.add_term(8, c.m4);
            expect.add_term(4, c.m2);
            expect.add_term(0, 1);
            CHECK(lemma21_closed_form(w->b1, w->b2, w->b3, w->eps, w->delta) ==
                  expect);
        }
    }
}

TEST_CASE("decision agrees with the oracle on a sample grid") {
    for (int m4 = -8; m4 <= 8; ++m4)
        for (int m2 = -8; m2 <= 8; ++m2) {
            ConwayGenus2 c{m4, m2};
            const bool decided = two_clasp_realizable(c).has_value();
            const bool brute = two_clasp_realizable_oracle(c, 30).has_value();
            CAPTURE(m4);
            CAPTURE(m2);
            CHECK(decided == brute);
            if (mod8_obstruction(c)) CHECK(!decided);
        }
}

TEST_CASE("one-clasp form implies two-clasp realizable") {
    for (int b1 = -10; b1 <= 10; ++b1) {
        Laurent p;
        p.add_term(4, b1);
        p.add_term(0, 1);
        auto one = one_clasp_form(p);
        REQUIRE(one.has_value());
        CHECK(two_clasp_realizable(conway_genus2_of(p)).has_value());
    }
}

TEST_CASE("genus lower bound from the Conway degree") {
    CHECK(genus_lower_from_conway(z("-z^4 + 1")) == 2);
    CHECK(genus_lower_from_conway(Laurent::one()) == 0);
    CHECK(genus_lower_from_conway(z("z^2 + 1")) == 1);
    CHECK_THROWS_AS(genus_lower_from_conway(z("z^3 + 1")), std::invalid_argument);
    CHECK_THROWS_AS(genus_lower_from_conway(Laurent()), std::invalid_argument);
}
