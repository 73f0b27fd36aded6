#include <doctest.h>

#include "hnum/cover.hpp"
#include "hnum/errors.hpp"

using namespace hnum;

namespace {

// The degree-3 cover (3) -> (1)+(2); (2) -> (1)+(1): one cut pair whose
// symmetric fork carries the two weight-1 ends.
TropicalCover classic_cover() {
    TropicalCover c;
    c.num_pairs = 1;
    c.edges = {
        {kLeftEnd, 0, 3}, {0, kRightEnd, 1}, {0, 1, 2}, {1, kRightEnd, 1}, {1, kRightEnd, 1},
    };
    return c;
}

RealStructure classic_rho(Colour bridge) {
    RealStructure rho;
    rho.dotted = {CFElem{3, 4, true}};
    rho.colours = {{2, bridge}};
    return rho;
}

} // namespace

TEST_CASE("validation of the classic cover") {
    TropicalCover c = classic_cover();
    CHECK_FALSE(validate_cover(c, 0, Partition({3}), Partition({1, 1, 1})));

    SUBCASE("altered weight breaks balancing") {
        c.edges[2].weight = 5;
        auto v = validate_cover(c, 0, Partition({3}), Partition({1, 1, 1}));
        REQUIRE(v);
        CHECK(v->clause == "balancing");
    }
    SUBCASE("wrong genus") {
        auto v = validate_cover(c, 1, Partition({3}), Partition({1, 1, 1}));
        REQUIRE(v);
        CHECK(v->clause == "genus");
    }
    SUBCASE("wrong profiles") {
        auto v = validate_cover(c, 0, Partition({2, 1}), Partition({1, 1, 1}));
        REQUIRE(v);
        CHECK(v->clause == "left-profile");
        v = validate_cover(c, 0, Partition({3}), Partition({2, 1}));
        REQUIRE(v);
        CHECK(v->clause == "right-profile");
    }
    SUBCASE("bad valence") {
        c.edges.push_back({0, kRightEnd, 1});
        auto v = validate_cover(c, 0, Partition({3}), Partition({1, 1, 1}));
        REQUIRE(v);
        CHECK(v->clause == "valence");
    }
}

TEST_CASE("disconnected cover is reported as such") {
    // The classic pair plus an untouched strand of weight 2.
    TropicalCover c = classic_cover();
    c.edges.push_back({kLeftEnd, kRightEnd, 2});
    auto v = validate_cover(c, 0, Partition({3, 2}), Partition({2, 1, 1, 1}));
    REQUIRE(v);
    CHECK(v->clause == "connectivity");
}

TEST_CASE("multiplicity of the classic cover is 1") {
    TropicalCover c = classic_cover();
    CHECK(mult_enhanced(c, classic_rho(Colour::Blue)) == 1);
    // The value only depends on the dotting, not on the colours.
    CHECK(mult_enhanced(c, classic_rho(Colour::Red)) == 1);
}

TEST_CASE("one dotted symmetric circle of weight-2 edges contributes 2*2") {
    // (7) cut to (3) + pair(2,2), pair rejoined, back to (7): the dotted
    // circle is the only contribution.
    TropicalCover c;
    c.num_pairs = 2;
    c.edges = {
        {kLeftEnd, 0, 7}, // 0
        {0, 3, 3},        // 1 odd inner
        {0, 1, 4},        // 2 bridge
        {1, 2, 2},        // 3 dotted circle
        {1, 2, 2},        // 4 dotted circle
        {2, 3, 4},        // 5 bridge
        {3, kRightEnd, 7} // 6
    };
    CHECK_FALSE(validate_cover(c, 2, Partition({7}), Partition({7})));
    RealStructure rho;
    rho.dotted = {CFElem{3, 4, false}};
    rho.colours = {{2, Colour::Blue}, {5, Colour::Blue}};
    CHECK(mult_enhanced(c, rho) == 4);
    CHECK(symmetric_circles(c).size() == 1);
    CHECK(nonsymmetric_even_bridge_circles(c).empty());
    CHECK(even_inner_undotted(c, rho) == std::vector<int>{2, 5});
    CHECK(even_bridges(c) == std::vector<int>{2, 5});
}

TEST_CASE("nonsymmetric even circle doubles the multiplicity") {
    // Weight 6 opened into a 2/4 circle and closed again.
    TropicalCover c;
    c.num_pairs = 1;
    c.edges = {{kLeftEnd, 0, 6}, {0, 1, 2}, {0, 1, 4}, {1, kRightEnd, 6}};
    CHECK_FALSE(validate_cover(c, 1, Partition({6}), Partition({6})));
    RealStructure rho;
    rho.colours = {{0, Colour::Blue}};
    CHECK(nonsymmetric_even_bridge_circles(c).size() == 1);
    CHECK(mult_enhanced(c, rho) == 2);
}

TEST_CASE("canonical key ignores parallel edge order") {
    TropicalCover a = classic_cover();
    TropicalCover b = classic_cover();
    std::swap(b.edges[3], b.edges[4]);
    RealStructure rho_a = classic_rho(Colour::Blue);
    RealStructure rho_b = classic_rho(Colour::Blue);
    CHECK(canonical_key(a, rho_a, true) == canonical_key(b, rho_b, true));
    CHECK(canonical_key(a, rho_a, true) != canonical_key(a, classic_rho(Colour::Red), true));
    CHECK(canonical_key(a, rho_a, false) == canonical_key(a, classic_rho(Colour::Red), false));
}

TEST_CASE("edge colours are read through components") {
    TropicalCover c = classic_cover();
    RealStructure rho = classic_rho(Colour::Blue);
    CHECK(edge_colour(c, rho, 2) == Colour::Blue);
    CHECK(edge_colour(c, rho, 0) == Colour::None); // odd
    CHECK(edge_colour(c, rho, 3) == Colour::None); // dotted
}
