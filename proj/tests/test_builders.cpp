#include <doctest.h>

#include <set>

#include "hnum/builders.hpp"
#include "hnum/errors.hpp"
#include "hnum/universal.hpp"

using namespace hnum;

namespace {

Partition Pt(const std::string& text) { return Partition::parse(text); }

std::string universal_key(const TropicalCover& c) {
    RealStructure dots;
    dots.dotted = universal_dotting(c);
    return canonical_key(c, dots, false);
}

uint128 fact(int n) {
    uint128 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("non-vanishing construction at genus zero") {
    TropicalCover c = build_nonvanishing_cover(0, Pt("3"), Pt("1,1,1"));
    CHECK_FALSE(validate_cover(c, 0, Pt("3"), Pt("1,1,1")));
    CHECK(is_universally_enhanced(c));
    // It is the unique enumerated class.
    auto classes = enumerate_universal(0, Pt("3"), Pt("1,1,1"));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].key == universal_key(c));
}

TEST_CASE("non-vanishing construction carries genus as circles") {
    TropicalCover c = build_nonvanishing_cover(1, Pt("3"), Pt("1,1,1"));
    CHECK_FALSE(validate_cover(c, 1, Pt("3"), Pt("1,1,1")));
    CHECK(c.genus() == 1);
    CHECK(is_universally_enhanced(c));
}

TEST_CASE("non-vanishing construction with several strings and tails") {
    struct Case {
        int g;
        const char* l;
        const char* m;
    } cases[] = {{0, "3,1", "3,1"},     {0, "5,1,1,1", "5,1,1,1"}, {1, "3,3,1", "5,1,1"},
                 {0, "3,2,2", "7"},     {1, "3,1", "3,1"},         {0, "1,1,1", "3"},
                 {0, "7,2,2", "5,3,3"}, {2, "5", "3,1,1"}};
    for (const Case& c : cases) {
        CAPTURE(c.l);
        CAPTURE(c.m);
        TropicalCover cover = build_nonvanishing_cover(c.g, Pt(c.l), Pt(c.m));
        CHECK_FALSE(validate_cover(cover, c.g, Pt(c.l), Pt(c.m)));
        CHECK(is_universally_enhanced(cover));
        CHECK(universal_mult(cover) >= 1);
    }
}

TEST_CASE("built non-vanishing covers are enumerated") {
    struct Case {
        int g;
        const char* l;
        const char* m;
    } cases[] = {{0, "3,1", "3,1"}, {1, "3", "1,1,1"}, {0, "3,2,2", "7"}, {0, "1,1,1", "3"}};
    for (const Case& c : cases) {
        TropicalCover cover = build_nonvanishing_cover(c.g, Pt(c.l), Pt(c.m));
        std::string key = universal_key(cover);
        bool member = false;
        for (const CoverClass& cls : enumerate_universal(c.g, Pt(c.l), Pt(c.m)))
            member |= cls.key == key;
        CHECK(member);
    }
}

TEST_CASE("non-vanishing hypothesis gate") {
    // lambda_e nonempty.
    CHECK_THROWS_AS(build_nonvanishing_cover(0, Pt("2,1"), Pt("2,1")), DegenerateError);
    // mismatched distinct-odd counts.
    CHECK_THROWS_AS(build_nonvanishing_cover(0, Pt("3,1"), Pt("1,1,1,1")), DegenerateError);
    // degree 1 cannot carry genus.
    CHECK_THROWS_AS(build_nonvanishing_cover(1, Pt("1"), Pt("1")), DegenerateError);
}

TEST_CASE("block family sizes and validity") {
    CHECK(build_block_family(4).size() == 1);
    CHECK(build_block_family(7).size() == 2);
    CHECK_THROWS_AS(build_block_family(3), DegenerateError);
    for (int m = 4; m <= 10; ++m) {
        std::vector<TropicalCover> family = build_block_family(m);
        Partition ones(std::vector<int>(m, 1));
        std::set<std::string> keys;
        for (const TropicalCover& c : family) {
            CHECK_FALSE(validate_cover(c, 0, ones, ones));
            CHECK(is_universally_enhanced(c));
            keys.insert(universal_key(c));
        }
        CHECK((uint128)keys.size() >= fact((m - 1) / 3));
        CHECK(keys.size() == family.size()); // the orderings are pairwise distinct
    }
}

TEST_CASE("family members appear in the universal enumeration") {
    for (int m : {4, 5, 6, 7}) {
        Partition ones(std::vector<int>(m, 1));
        std::set<std::string> enumerated;
        for (const CoverClass& cls : enumerate_universal(0, ones, ones))
            enumerated.insert(cls.key);
        for (const TropicalCover& c : build_block_family(m))
            CHECK(enumerated.count(universal_key(c)) == 1);
    }
}
