#include "doctest.h"

#include "knots/diagram.hpp"
#include "knots/moves.hpp"

using namespace knots;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
}  // namespace

TEST_CASE("pd parsing") {
    PdCode pd = parse_pd(kTrefoil);
    CHECK(pd.num_crossings() == 3);
    CHECK(parse_pd("").num_crossings() == 0);
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), PdParseError);
    CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), PdParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4] X[1,2,3,4] X[5,6,5,6]"), PdParseError);
    CHECK_THROWS_AS(parse_pd("X[1,1,2,2]"), PdParseError);
    CHECK(to_string(pd) == kTrefoil);
    CHECK(parse_pd(to_string(pd)) == pd);
}

TEST_CASE("orientation and signs") {
    Diagram tre = orient(parse_pd(kTrefoil));
    CHECK(tre.writhe() == -3);
    CHECK(tre.num_components() == 1);
    CHECK(tre.is_knot());
    CHECK(tre.embedding_genus() == 0);

    Diagram fig8 = orient(parse_pd(kFig8));
    CHECK(fig8.writhe() == 0);
    CHECK(fig8.is_knot());
    CHECK(fig8.embedding_genus() == 0);

    Diagram unknot = orient(parse_pd(""));
    CHECK(unknot.num_components() == 1);
    CHECK(unknot.writhe() == 0);
    CHECK(unknot.num_crossings() == 0);
}

TEST_CASE("orient then re-serialize is a fixpoint") {
    for (const char* text : {kTrefoil, kFig8}) {
        PdCode pd = parse_pd(text);
        CHECK(orient(pd).to_pd() == pd);
    }
}

TEST_CASE("crossing change") {
    Diagram tre = orient(parse_pd(kTrefoil));
    Diagram once = tre.crossing_change(1);
    CHECK(once.writhe() == -1);
    CHECK(once.num_components() == 1);
    Diagram twice = once.crossing_change(1);
    CHECK(twice.canonical_pd() == tre.canonical_pd());
    CHECK_THROWS_AS(orient(parse_pd("")).crossing_change(0), std::out_of_range);
}

TEST_CASE("mirror") {
    Diagram tre = orient(parse_pd(kTrefoil));
    CHECK(tre.mirrored().writhe() == 3);
    CHECK(tre.mirrored().mirrored().canonical_pd() == tre.canonical_pd());
    CHECK(tre.mirrored().num_components() == 1);
}

TEST_CASE("oriented smoothing") {
    Diagram tre = orient(parse_pd(kTrefoil));
    for (int i = 0; i < 3; ++i) {
        Diagram sm = tre.smooth_oriented(i);
        CHECK(sm.num_components() == 2);
        CHECK(sm.num_crossings() == 2);
    }
    CHECK_THROWS_AS(orient(parse_pd("")).smooth_oriented(0), std::out_of_range);
}

TEST_CASE("seifert circles and canonical genus") {
    Diagram tre = orient(parse_pd(kTrefoil));
    CHECK(tre.seifert_circle_count() == 2);
    CHECK(tre.canonical_seifert_genus() == 1);

    Diagram fig8 = orient(parse_pd(kFig8));
    CHECK((fig8.num_crossings() - fig8.seifert_circle_count() + 1) % 2 == 0);
    CHECK(fig8.canonical_seifert_genus() == 1);

    CHECK(orient(parse_pd("")).canonical_seifert_genus() == 0);
    Diagram hopfish = tre.smooth_oriented(0);
    CHECK_THROWS_AS(hopfish.canonical_seifert_genus(), std::invalid_argument);
}

TEST_CASE("connected sum splices two knots") {
    Diagram tre = orient(parse_pd(kTrefoil));
    Diagram fig8 = orient(parse_pd(kFig8));
    Diagram sum = connected_sum(tre, 1, fig8, 1);
    CHECK(sum.is_knot());
    CHECK(sum.num_crossings() == 7);
    CHECK(sum.writhe() == tre.writhe() + fig8.writhe());
    CHECK(sum.embedding_genus() == 0);
    CHECK_THROWS_AS(connected_sum(tre, 1, tre.smooth_oriented(0), 1),
                    std::invalid_argument);
}

TEST_CASE("twist insertion counts and parity") {
    Diagram tre = orient(parse_pd(kTrefoil));
    const Crossing c = tre.crossings()[0];
    TwistSite site{c.over_in, c.under_in};

    Diagram plus2 = insert_twists(tre, site, 2);
    CHECK(plus2.num_crossings() == 5);
    CHECK(plus2.num_components() == 1);
    CHECK(plus2.embedding_genus() == 0);

    Diagram minus1 = insert_twists(tre, site, -1);
    CHECK(minus1.num_crossings() == 4);
    CHECK(minus1.num_components() == 2);

    CHECK(insert_twists(tre, site, 0).canonical_pd() == tre.canonical_pd());
}

TEST_CASE("reidemeister insertions stay planar and reduce back") {
    Diagram tre = orient(parse_pd(kTrefoil));
    Diagram kinked = r1_insert(tre, 2, true, +1);
    CHECK(kinked.num_crossings() == 4);
    CHECK(kinked.embedding_genus() == 0);
    CHECK(reduce_r1_r2(kinked).num_crossings() == 3);

    const Crossing& c0 = tre.crossings()[0];
    Diagram poked;
    try {
        poked = r2_insert(tre, c0.over_in, c0.under_in, +1);
    } catch (const std::invalid_argument&) {
        poked = r2_insert(tre, c0.over_in, c0.under_in, -1);
    }
    CHECK(poked.num_crossings() == 5);
    CHECK(poked.embedding_genus() == 0);
    CHECK(reduce_r1_r2(poked).num_crossings() == 3);

    // The trefoil itself has no kinks or poke bigons.
    CHECK(reduce_r1_r2(tre).num_crossings() == 3);
}

TEST_CASE("dt parsing") {
    PdCode tre = parse_dt("4 6 2");
    CHECK(tre.num_crossings() == 3);
    Diagram d = orient(tre);
    CHECK(d.is_knot());
    CHECK(d.embedding_genus() == 0);

    PdCode fig8 = parse_dt("4 6 8 2");
    CHECK(fig8.num_crossings() == 4);
    CHECK(orient(fig8).is_knot());

    CHECK_THROWS_AS(parse_dt("3 5"), PdParseError);
    CHECK_THROWS_AS(parse_dt("4 4 2"), PdParseError);
    CHECK(parse_dt("").num_crossings() == 0);
}
