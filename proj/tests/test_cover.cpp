#include <doctest.h>

#include "curve3/cover.hpp"

using namespace curve3;

TEST_SUITE_BEGIN("cover");

static CoverData make(long order, long g, long prank, std::vector<std::pair<long, std::vector<long>>> orbits) {
    CoverData c;
    c.group_order = order;
    c.base_genus = g;
    c.base_prank = prank;
    for (auto& [len, js] : orbits) {
        ShortOrbit o;
        o.length = len;
        for (long j : js) o.jumps.push_back(j);
        c.orbits.push_back(o);
    }
    return c;
}

TEST_CASE("hurwitz examples") {
    // |S|=27, rational base, two orbits of length 9 with jumps (3,3) -> g = 10
    CHECK(hurwitz_genus(make(27, 0, 0, {{9, {3, 3}}, {9, {3, 3}}})) == 10);
    // |S|=3, two fixed points with jumps (3,3) -> g = 2
    CHECK(hurwitz_genus(make(3, 0, 0, {{1, {3, 3}}, {1, {3, 3}}})) == 2);
    // unramified cover of an elliptic base has genus 1
    CHECK(hurwitz_genus(make(81, 1, 1, {})) == 1);
}

TEST_CASE("hurwitz rejects inconsistent data") {
    // odd right-hand side: |S|=3, one orbit length 1, jumps (3,3,3) -> d=6, rhs=-6+6=0, g=1 fine;
    // build a parity violation instead with jumps (3,3) on a single orbit: rhs = -6+4 = -2 -> g=0 fine.
    // negative genus: unramified over rational base
    CHECK_THROWS_AS(hurwitz_genus(make(9, 0, 0, {})), inconsistent_data_error);
    // orbit length not dividing group order
    CHECK_THROWS_AS(hurwitz_genus(make(9, 0, 0, {{2, {3, 3}}})), inconsistent_data_error);
    // jumps must start at the stabilizer order twice
    CHECK_THROWS_AS(hurwitz_genus(make(9, 0, 0, {{3, {9, 3}}})), inconsistent_data_error);
    // parity violation: |S|=3, base genus 0, one orbit of length 1 with jumps (3,3,3):
    // rhs = -6 + 1*(2+2+2) = 0 -> g = 1; use jumps (3,3) length 3 orbit of |S|=9 for odd rhs:
    // -18 + 3*4 = -6 -> g=-2 negative
    CHECK_THROWS_AS(hurwitz_genus(make(9, 0, 0, {{3, {3, 3}}})), inconsistent_data_error);
}

TEST_CASE("deuring-shafarevich examples") {
    CHECK(dsh_prank(make(27, 0, 0, {{9, {3, 3}}, {9, {3, 3}}})) == 10);
    // unramified |S|=9 over ordinary genus-2 base: gamma = 10
    CHECK(dsh_prank(make(9, 2, 2, {})) == 10);
    // identity cover
    CHECK(dsh_prank(make(1, 5, 3, {})) == 3);
}

TEST_CASE("dsh_prank ignores higher jumps, hurwitz does not") {
    auto low = make(27, 0, 0, {{9, {3, 3}}, {9, {3, 3}}});
    auto high = make(27, 0, 0, {{9, {3, 3, 3}}, {9, {3, 3}}});
    CHECK(dsh_prank(low) == dsh_prank(high));
    CHECK(hurwitz_genus(high) > hurwitz_genus(low));
}

TEST_CASE("gamma <= g for ordinary-compatible generated data") {
    for (long so = 0; so <= 2; ++so)
        for (long len : {1L, 3L, 9L}) {
            std::vector<std::pair<long, std::vector<long>>> orbits;
            for (long i = 0; i < so; ++i) orbits.push_back({len, {27 / len, 27 / len}});
            auto c = make(27, 1, 1, orbits);
            CHECK(dsh_prank(c) <= hurwitz_genus(c));
        }
}

TEST_CASE("bound_report examples") {
    auto r = bound_report(10, 10, 3, false, BigInt(27));
    REQUIRE(r.nakajima.has_value());
    CHECK(*r.nakajima == 27);
    CHECK(r.large_group_threshold == 18);
    CHECK(r.exceeds_threshold == true);
    CHECK(r.attains_nakajima == true);

    auto r2 = bound_report(2, 2, 3, true);
    REQUIRE(r2.point_stabilizer.has_value());
    CHECK(*r2.point_stabilizer == 3);
    CHECK(r2.stichtenoth_total == 24); // floor(6*4)

    auto r3 = bound_report(5, 0, 3, false);
    CHECK(r3.nakajima_inapplicable);
    CHECK_FALSE(r3.nakajima.has_value());

    auto r4 = bound_report(82, 82, 3, false, BigInt(243));
    CHECK(r4.attains_nakajima == true);

    CHECK_THROWS_AS(bound_report(5, 6, 3, false), inconsistent_data_error);
}

TEST_CASE("short orbit numerology has the unique solution m=r=h-1 for h in [2,20]") {
    for (int h = 2; h <= 20; ++h) {
        auto out = short_orbit_numerology(h);
        REQUIRE(out.solutions.size() == 1);
        CHECK(out.solutions[0].first == h - 1);
        CHECK(out.solutions[0].second == h - 1);
    }
    auto o3 = short_orbit_numerology(3);
    CHECK(o3.l1 == 9);
    CHECK(o3.l2 == 9);
    auto o2 = short_orbit_numerology(2);
    CHECK(o2.l1 == 3);
    CHECK_THROWS_AS(short_orbit_numerology(25), guard_error);
}

TEST_CASE("cover data json round trip") {
    auto c = make(27, 0, 0, {{9, {3, 3}}, {9, {3, 3}}});
    auto c2 = CoverData::from_json_text(c.to_json_text());
    CHECK(hurwitz_genus(c2) == 10);
    CHECK(dsh_prank(c2) == 10);
    auto c3 = CoverData::from_json_text(
        R"({"group_order":27,"base_genus":0,"base_prank":0,"orbits":[{"length":9,"jumps":[3,3]}]})");
    CHECK(c3.orbits.size() == 1);
}

TEST_SUITE_END();
