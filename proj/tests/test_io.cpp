#include <doctest.h>

#include <json.hpp>

#include "hnum/io.hpp"
#include "hnum/sweep.hpp"

using namespace hnum;

namespace {

Partition Pt(const std::string& text) { return Partition::parse(text); }
SignSplitting S(const std::string& text) { return SignSplitting::parse(text); }

} // namespace

TEST_CASE("json export of the classic cover") {
    auto classes = enumerate_enhanced_covers(0, Pt("3"), Pt("1,1,1"), S("+"));
    REQUIRE(classes.size() == 1);
    std::string text = cover_to_json(classes[0].cover, classes[0].rho, "+");
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["degree"] == 3);
    CHECK(j["genus"] == 0);
    CHECK(j["pairs"].size() == 1);
    CHECK(j["edges"].size() == 5);
    CHECK(j["splitting"] == "+");
    int left = 0, bridges = 0, right = 0, dotted = 0;
    for (const auto& e : j["edges"]) {
        if (e["from"] == "-inf") ++left;
        if (e["to"] == "+inf") ++right;
        if (e["from"].is_number() && e["to"].is_number()) ++bridges;
        if (!e["dotted_pair"].is_null()) ++dotted;
    }
    CHECK(left == 1);
    CHECK(bridges == 1);
    CHECK(right == 3);
    CHECK(dotted == 2); // the fork pair is flagged
}

TEST_CASE("json round trip preserves the canonical key") {
    struct Case {
        int g;
        const char* l;
        const char* m;
        const char* s;
    } cases[] = {{0, "3", "1,1,1", "+"}, {1, "2,2", "2,2", "-+"}, {2, "4,2", "4,2", "+-+"},
                 {0, "1,1,1,1", "2,2", "++"}};
    for (const Case& c : cases) {
        for (const CoverClass& cls : enumerate_enhanced_covers(c.g, Pt(c.l), Pt(c.m), S(c.s))) {
            ParsedCover back = cover_from_json(cover_to_json(cls.cover, cls.rho, c.s));
            CHECK(canonical_key(back.cover, back.rho, true) == cls.key);
            CHECK(back.splitting == c.s);
        }
    }
}

TEST_CASE("dot export is structurally sound") {
    auto classes = enumerate_enhanced_covers(1, Pt("4"), Pt("4"), S("+"));
    REQUIRE(classes.size() == 1);
    std::string dot = cover_to_dot(classes[0].cover, classes[0].rho);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '{') == 1);
    CHECK(std::count(dot.begin(), dot.end(), '}') == 1);
    CHECK(dot.find("v0 -> v1") != std::string::npos);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
    // Quotes come in pairs.
    CHECK(std::count(dot.begin(), dot.end(), '"') % 2 == 0);
}

TEST_CASE("export format parsing") {
    CHECK(parse_export_format("json") == ExportFormat::Json);
    CHECK(parse_export_format("dot") == ExportFormat::Dot);
    CHECK_THROWS_AS(parse_export_format("svg"), ParseError);
}
