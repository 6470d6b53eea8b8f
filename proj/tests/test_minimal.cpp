#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

StackyFan fig_all_blue() {
    return fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{1, 0}, {-2, -1}}), sc_full(2, {{0, 1}, {-2, -1}})});
}

bool same_s_in_box(const StackyFan& a, const StackyFan& b, long r) {
    bool same = true;
    for_each_point(a.ambient(), r, [&](const Vec& v) { same &= oracle_s_member(a, v) == oracle_s_member(b, v); });
    return same;
}

}  // namespace

TEST_CASE("minimal fan of the figure fan") {
    MinimalFan m = minimal_fan(fig_fan());
    std::vector<StackyCone> expect{sc_full(2, {{1, 0}, {0, 1}}), sc_full(2, {{1, 0}, {-2, -1}}),
                                   sc(2, {{0, 1}, {-2, -1}}, {{2, 0}, {0, 1}})};
    std::sort(expect.begin(), expect.end());
    CHECK(m.pieces == expect);
    auto col = coloring_of(m);
    REQUIRE(col.colors.size() == 2);
    CHECK(col.colors[0].lattice == Sublattice::full(2));
    CHECK(col.colors[0].cones.size() == 2);
    for_each_point(2, 6, [&](const Vec& v) { CHECK(minimal_set_member(v, m) == oracle_s_member(fig_fan(), v)); });
}

TEST_CASE("minimal fan of a fan with full lattices is one color") {
    MinimalFan m = minimal_fan(p2_fan());
    auto col = coloring_of(m);
    REQUIRE(col.colors.size() == 1);
    CHECK(col.colors[0].lattice == Sublattice::full(2));
    CHECK(m == minimal_fan(quadrants_fan()));
    CHECK(m == minimal_fan(hirzebruch(1)));
    CHECK(coloring_is_complete(m));
}

TEST_CASE("minimal fan is idempotent and order independent") {
    MinimalFan m = minimal_fan(fig_fan());
    CHECK(minimal_from_pieces(2, m.pieces) == m);
    auto maxi = fig_fan().maximal_cones();
    std::reverse(maxi.begin(), maxi.end());
    CHECK(minimal_fan(StackyFan(2, maxi)) == m);
}

TEST_CASE("birational equivalence examples") {
    CHECK(birationally_equivalent(p2_fan(), hirzebruch(1)));
    Vec w;
    CHECK_FALSE(birationally_equivalent(fig_fan(), p2_fan(), &w));
    CHECK(w == Vec{-1, 0});
    CHECK(oracle_s_member(p2_fan(), w) != oracle_s_member(fig_fan(), w));
    CHECK_FALSE(birationally_equivalent(quadrant_fan(), p2_fan(), &w));
    CHECK(oracle_s_member(p2_fan(), w) != oracle_s_member(quadrant_fan(), w));
}

TEST_CASE("colorings") {
    auto c = to_coloring(fig_fan());
    REQUIRE(c.colors.size() == 2);
    CHECK(c.colors[0].lattice == Sublattice::full(2));
    CHECK(c.colors[0].cones.size() == 2);
    CHECK(c.colors[1].lattice == Sublattice(2, {{2, 0}, {0, 1}}));
    CHECK(to_coloring(p2_fan()).colors.size() == 1);
    CHECK(to_coloring(fig_all_blue()).colors.size() == 1);
    CHECK_THROWS_AS(to_coloring(quadrant_fan()), CompletenessRequiredError);
    CHECK(from_coloring(c) == minimal_fan(fig_fan()));

    SublatticeColoring bad{2, {{Sublattice::full(2), {Cone::from_rays(2, {{1, 0}, {0, 1}})}},
                               {Sublattice(2, {{2, 0}, {0, 1}}), {Cone::from_rays(2, {{1, 1}, {0, 1}})}}}};
    CHECK_THROWS_AS(from_coloring(bad), ColoringInvalidError);

    MinimalFan m = minimal_fan(fig_fan());
    CHECK_FALSE(minimal_set_member({-1, 0}, m));
    CHECK(minimal_set_member({-2, 0}, m));
    CHECK(minimal_set_member({0, 0}, m));
    CHECK(coloring_is_complete(m));
    CHECK_FALSE(coloring_is_complete(minimal_fan(quadrant_fan())));
    CHECK(coloring_is_complete(minimal_fan(StackyFan(0, {}))));
}

TEST_CASE("partial fans keep exposed lower-dimensional pieces") {
    StackyFan f = fan_of(2, {sc_full(2, {{1, 0}, {0, 1}}), sc(2, {{-1, -1}}, {{-2, -2}})});
    MinimalFan m = minimal_fan(f);
    CHECK(m.pieces.size() == 2);
    for_each_point(2, 6, [&](const Vec& v) { CHECK(minimal_set_member(v, m) == oracle_s_member(f, v)); });
    CHECK(minimal_fan(StackyFan(2, {})).pieces.size() == 1);
}

TEST_CASE("random fans: invariance, sensitivity and oracle agreement") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const int rank = static_cast<int>(uniform(rng, 1, 3));
        RandomFan rf = random_fan(rng, rank, uniform(rng, 0, 2) != 0);
        StackyFan f = build_fan(rf);
        MinimalFan m = minimal_fan(f);
        const long box = rank == 3 ? 3 : 6;
        for_each_point(rank, box, [&](const Vec& v) { CHECK(minimal_set_member(v, m) == oracle_s_member(f, v)); });
        CHECK(minimal_from_pieces(rank, m.pieces) == m);
        CHECK(coloring_is_complete(m) == is_complete(f));

        StackyFan g = stellar(rng, stellar(rng, f));
        CHECK(minimal_fan(g) == m);
        CHECK(birationally_equivalent(f, g));

        const int ray = static_cast<int>(uniform(rng, 0, static_cast<long>(rf.rays.size()) - 1));
        bool used = false;
        for (const auto& c : rf.maximal) used |= std::find(c.begin(), c.end(), ray) != c.end();
        if (used) {
            StackyFan r = build_fan(root_along(rf, ray));
            CHECK(validate(r).ok());
            CHECK(is_root_construction(r, f));
            CHECK_FALSE(minimal_fan(r) == m);
            Vec w;
            CHECK_FALSE(birationally_equivalent(f, r, &w));
            CHECK(oracle_s_member(f, w) != oracle_s_member(r, w));
        }
        if (is_complete(f)) CHECK(from_coloring(to_coloring(f)) == m);

        StackyFan other = build_fan(random_fan(rng, rank, uniform(rng, 0, 1) == 0));
        Vec w;
        bool eq = birationally_equivalent(f, other, &w);
        CHECK(eq == same_s_in_box(f, other, rank == 3 ? 4 : 8));
        if (!eq) CHECK(oracle_s_member(f, w) != oracle_s_member(other, w));
    }
}
