#include "doctest.h"

#include "knots/clasp.hpp"
#include "knots/diagram.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"
#include "knots/seifert.hpp"

#include <random>

using namespace knots;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

Laurent z(const char* s) { return parse_laurent(s, "z"); }
Laurent t(const char* s) { return parse_laurent(s, "t"); }

Diagram trefoil() { return orient(parse_pd(kTrefoil)); }
Diagram fig8() { return orient(parse_pd(kFig8)); }
}  // namespace

TEST_CASE("jones pins the conventions") {
    // Rolfsen's 3_1 (writhe -3 diagram) and its mirror.
    CHECK(jones(trefoil()) == t("t^-1 + t^-3 - t^-4"));
    CHECK(jones(trefoil().mirrored()) == t("t + t^3 - t^4"));
    CHECK(jones(fig8()) == t("t^-2 - t^-1 + 1 - t + t^2"));
    CHECK(jones(orient(parse_pd(""))) == Laurent::one());
}

TEST_CASE("kauffman state loop counts") {
    Diagram d = trefoil();
    SmoothingState all_a(d), all_b(d);
    for (int i = 0; i < 3; ++i) {
        all_a.smooth(i, SmoothKind::A);
        all_b.smooth(i, SmoothKind::B);
    }
    CHECK(all_a.loops() == 3);
    CHECK(all_b.loops() == 2);

    // The mirror swaps the counts.
    Diagram m = trefoil().mirrored();
    SmoothingState ma(m), mb(m);
    for (int i = 0; i < 3; ++i) {
        ma.smooth(i, SmoothKind::A);
        mb.smooth(i, SmoothKind::B);
    }
    CHECK(ma.loops() == 2);
    CHECK(mb.loops() == 3);
}

namespace {

// One-crossing unknot diagram (a single kink), built directly since the
// 1..2n text convention cannot express 2-arc components unambiguously.
Diagram kink_unknot(int sign) {
    Diagram d;
    Crossing c;
    c.under_in = 1;
    c.under_out = 2;
    c.over_in = 2;
    c.over_out = 1;
    c.sign = sign;
    d.add_crossing(c);
    return d;
}

}  // namespace

TEST_CASE("kinked and poked unknots normalize to the trivial polynomials") {
    for (int sign : {+1, -1}) {
        Diagram k = kink_unknot(sign);
        CHECK(k.is_knot());
        CHECK(k.embedding_genus() == 0);
        CHECK(jones(k) == Laurent::one());
        CHECK(alexander(k) == Laurent::one());
        Diagram poked;
        try {
            poked = r2_insert(k, 1, 2, +1);
        } catch (const std::invalid_argument&) {
            poked = r2_insert(k, 1, 2, -1);
        }
        CHECK(poked.num_crossings() == 3);
        CHECK(jones(poked) == Laurent::one());
        CHECK(unknot_certificate(poked) == UnknotVerdict::TriviallyCertified);
    }
}

TEST_CASE("alexander and conway of the standard knots") {
    CHECK(alexander(trefoil()) == t("t - 1 + t^-1"));
    CHECK(conway(trefoil()) == z("z^2 + 1"));
    CHECK(conway(trefoil().mirrored()) == z("z^2 + 1"));
    CHECK(alexander(fig8()) == t("-t + 3 - t^-1"));
    CHECK(conway(fig8()) == z("-z^2 + 1"));
    CHECK(alexander(orient(parse_pd(""))) == Laurent::one());
    CHECK_THROWS_AS(alexander(trefoil().smooth_oriented(0)), std::invalid_argument);
}

TEST_CASE("paper constants for the connected sum") {
    Diagram k0 = connected_sum(trefoil().mirrored(), 1, fig8(), 1);
    CHECK(conway(k0) == z("-z^4 + 1"));
    CHECK(jones(k0) == t("t^-1 - 1 + 2t - 3t^2 + 3t^3 - 2t^4 + 2t^5 - t^6"));
    CHECK(alexander(k0) == substitute_z(z("-z^4 + 1")));
}

TEST_CASE("seifert matrix routes") {
    SeifertMatrix tre = SeifertMatrix::from_rows({{-1, 1}, {0, -1}});
    CHECK(alexander_from_seifert(tre) == t("t^2 - t + 1"));
    CHECK(conway_from_seifert(tre) == z("z^2 + 1"));
    CHECK(conway_from_seifert(tre) == conway(trefoil()));

    SeifertMatrix f8 = SeifertMatrix::from_rows({{1, 1}, {0, -1}});
    CHECK(conway_from_seifert(f8) == z("-z^2 + 1"));
    CHECK(conway_from_seifert(f8) == conway(fig8()));

    CHECK(alexander_from_seifert(SeifertMatrix{}) == Laurent::one());
    CHECK(conway_from_seifert(SeifertMatrix{}) == Laurent::one());

    CHECK(alexander_from_seifert(lemma21_matrix(0, 0, 0, 1, 1, 0)) == t("t^2"));
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        // 6x6 forces the Bareiss path; compare against the 4x4-blocked
        // Laplace expansion by computing the same determinant twice with
        // permuted rows (equal up to sign).
        std::vector<std::vector<Laurent>> m(6, std::vector<Laurent>(6));
        for (auto& row : m)
            for (auto& e : row) {
                Laurent v;
                v.add_term(0, coeff(rng));
                v.add_term(2, coeff(rng));
                e = v;
            }
        Laurent direct = laurent_det(m);
        std::swap(m[0], m[1]);
        CHECK(laurent_det(m) == -direct);
    }
}

TEST_CASE("unknot certificate") {
    CHECK(unknot_certificate(orient(parse_pd(""))) ==
          UnknotVerdict::TriviallyCertified);
    CHECK(unknot_certificate(trefoil()) == UnknotVerdict::NontrivialPolynomial);
    CHECK(unknot_certificate(trefoil().crossing_change(0)) !=
          UnknotVerdict::NontrivialPolynomial);
}

TEST_CASE("reidemeister invariance of the engines") {
    for (Diagram d : {trefoil(), fig8()}) {
        const Laurent v = jones(d), nabla = conway(d);
        for (bool over : {true, false})
            for (int sign : {+1, -1}) {
                Diagram k = r1_insert(d, 1, over, sign);
                CHECK(jones(k) == v);
                CHECK(conway(k) == nabla);
            }
        // Poke the two incoming strands of the first crossing (they always
        // share a face there); at least one side/pattern embeds.
        const Crossing& c = d.crossings()[0];
        int tested = 0;
        for (int side : {+1, -1})
            for (bool anti : {false, true}) {
                try {
                    Diagram p = r2_insert(d, c.over_in, c.under_in, side, anti);
                    CHECK(jones(p) == v);
                    CHECK(conway(p) == nabla);
                    ++tested;
                } catch (const std::invalid_argument&) {
                }
            }
        CHECK(tested >= 1);
    }
}

TEST_CASE("jones skein relation on crossings of small knots") {
    const Laurent lhs_plus = t("t^-1"), lhs_minus = t("t");
    const Laurent rhs = t("t^(1/2) - t^(-1/2)");
    for (Diagram d : {trefoil(), fig8(),
                      connected_sum(trefoil().mirrored(), 2, fig8(), 3)}) {
        for (int i = 0; i < d.num_crossings(); ++i) {
            const Crossing& c = d.crossings()[i];
            const Diagram plus = c.sign > 0 ? d : d.crossing_change(i);
            const Diagram minus = c.sign > 0 ? d.crossing_change(i) : d;
            const Diagram zero = d.smooth_oriented(i);
            CHECK(lhs_plus * jones(plus) - lhs_minus * jones(minus) ==
                  rhs * jones(zero));
        }
    }
}

TEST_CASE("multiplicativity under connected sum") {
    Diagram a = trefoil(), b = fig8();
    for (int arc1 : {1, 4})
        for (int arc2 : {2, 7}) {
            Diagram sum = connected_sum(a, arc1, b, arc2);
            CHECK(conway(sum) == conway(a) * conway(b));
            CHECK(jones(sum) == jones(a) * jones(b));
        }
}

TEST_CASE("conway degree bounded by twice the canonical genus") {
    for (Diagram d : {trefoil(), fig8(),
                      connected_sum(trefoil(), 1, trefoil().mirrored(), 1)}) {
        const Laurent nabla = conway(d);
        if (!nabla.is_zero())
            CHECK(nabla.max_exp2() / 4 <= d.canonical_seifert_genus());
    }
}

TEST_CASE("mirror duality") {
    for (Diagram d : {trefoil(), fig8()}) {
        CHECK(jones(d.mirrored()) == jones(d).reversed());
        CHECK(conway(d.mirrored()) == conway(d));
    }
}
