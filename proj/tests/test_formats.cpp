#include <doctest.h>

#include "hgmd/construct.hpp"
#include "hgmd/error.hpp"
#include "hgmd/formats.hpp"
#include "hgmd/landmark.hpp"
#include "hgmd/search.hpp"

using namespace hgmd;

namespace {

std::string parse_error(std::string_view text, LandmarkFormat format, const GhgParams& g) {
    try {
        parse_landmarks(text, format, g);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        const std::string what = e.what();
        return what.substr(what.find(": ") + 2);
    }
    FAIL("expected a parse error");
    return {};
}

}  // namespace

TEST_CASE("pls parsing") {
    const auto g = GhgParams::diagonal(3);
    const auto w = parse_landmarks("1 2 3\n3 1 2\n. . .\n", LandmarkFormat::Pls, g);
    CHECK(w == fixture("n3"));
    CHECK(parse_landmarks(". . .\n. . .\n. . .\n", LandmarkFormat::Pls, g).empty());
    // arbitrary whitespace, comments and blank lines
    CHECK(parse_landmarks("# square\n  1\t2   3\n\n3 1 2\r\n.  .  .", LandmarkFormat::Pls, g) == w);

    CHECK(parse_error("1 2 3\n3 1 4\n. . .\n", LandmarkFormat::Pls, g).starts_with("line 2, column 5"));
    CHECK(parse_error("1 2 3\n3 1\n. . .\n", LandmarkFormat::Pls, g).starts_with("line 2"));
    CHECK(parse_error("1 2 3\n3 1 2\n", LandmarkFormat::Pls, g).find("2 rows") != std::string::npos);
    CHECK(parse_error("1 2 3\n3 1 2\n. . .\n. . .\n", LandmarkFormat::Pls, g).starts_with("line 4"));
    CHECK(parse_error("1 x 3\n3 1 2\n. . .\n", LandmarkFormat::Pls, g).starts_with("line 1, column 3"));
    CHECK(parse_error("1 0 3\n3 1 2\n. . .\n", LandmarkFormat::Pls, g).starts_with("line 1, column 3"));
}

TEST_CASE("triples parsing") {
    const auto g = GhgParams::diagonal(3);
    const std::string text = "# graph 3 3 3 3\n1 1 1\n1 2 2\n1 3 3\n2 1 3\n2 2 1\n2 3 2\n";
    CHECK(parse_landmarks(text, LandmarkFormat::Triples, g) == fixture("n3"));
    CHECK(parse_landmarks("2 2 1\n1 1 1\n", LandmarkFormat::Triples, g).size() == 2);
    CHECK(parse_error("1 1 1\n1 1 1\n", LandmarkFormat::Triples, g).starts_with("line 2, column 1"));
    CHECK(parse_error("1 1 1\n1 4 1\n", LandmarkFormat::Triples, g).starts_with("line 2, column 3"));
    CHECK(parse_error("1 1\n", LandmarkFormat::Triples, g).starts_with("line 1"));
    CHECK(parse_error("# graph 4 4 4 3\n1 1 1\n", LandmarkFormat::Triples, g).starts_with("line 1, column 9"));
    CHECK(parse_error("# graph 3 3 3 1,2\n", LandmarkFormat::Triples, g).starts_with("line 1"));
    const GhgParams complement({3, 3, 3}, {1, 2});
    CHECK(parse_landmarks("# graph 3 3 3 1,2\n1 1 1\n", LandmarkFormat::Triples, complement).size() == 1);
}

TEST_CASE("emission") {
    CHECK(emit_pls(fixture("n3")) == "1 2 3\n3 1 2\n. . .\n");
    CHECK(emit_pls(fixture("hg_5_7_11")) ==
          " 1  2  3 10  .  .  .\n"
          " 4  5  6  1  2  3  .\n"
          " 7  8  9  4  5  6  .\n"
          "10  .  .  7  8  9  .\n"
          " .  .  .  .  .  . 11\n");
    CHECK(emit_triples(fixture("n3")) == "# graph 3 3 3 3\n1 1 1\n1 2 2\n1 3 3\n2 1 3\n2 2 1\n2 3 2\n");

    const LandmarkSet stacked(GhgParams::diagonal(3), {{1, 1, 1}, {1, 1, 2}});
    CHECK_FALSE(pls_representable(stacked));
    CHECK_THROWS_AS(emit_pls(stacked), Error);
    CHECK(parse_landmarks(emit_triples(stacked), LandmarkFormat::Triples, stacked.graph()) == stacked);
}

TEST_CASE("round trips") {
    std::vector<LandmarkSet> sets;
    for (const auto& name : fixture_names()) sets.push_back(fixture(name));
    for (int n = 3; n <= 40; ++n) sets.push_back(metric_basis(n));
    for (const auto& w : enumerate_two_basic(5, 50, 1)) sets.push_back(w);
    for (const auto& w : sets) {
        const auto& g = w.graph();
        REQUIRE(parse_landmarks(emit_triples(w), LandmarkFormat::Triples, g) == w);
        REQUIRE(detect_format(emit_triples(w), g) == LandmarkFormat::Triples);
        if (pls_representable(w)) {
            REQUIRE(parse_landmarks(emit_pls(w), LandmarkFormat::Pls, g) == w);
            REQUIRE(detect_format(emit_pls(w), g) == LandmarkFormat::Pls);
        }
    }
}

TEST_CASE("format names") {
    CHECK(parse_format("pls") == LandmarkFormat::Pls);
    CHECK(parse_format("triples") == LandmarkFormat::Triples);
    CHECK_THROWS_AS(parse_format("csv"), Error);
    CHECK(to_string(LandmarkFormat::Triples) == "triples");
}

TEST_CASE("certificate documents") {
    const auto ok = to_json(is_resolving(fixture("n3")));
    CHECK(ok["schema"] == "hgmd.certificate/1");
    CHECK(ok["verdict"] == "RESOLVING");
    CHECK(ok["graph"] == "3x3x3;K=3");
    CHECK(ok["witness"].is_null());
    CHECK(ok["basis"].size() == 6);

    const auto bad = to_json(is_resolving(LandmarkSet(GhgParams::diagonal(3))));
    CHECK(bad["verdict"] == "UNRESOLVED");
    CHECK(bad["witness"] == nlohmann::ordered_json::parse("[[1,1,1],[1,1,2]]"));

    const auto none = to_json(exists_resolving_of_size(GhgParams::diagonal(3), 5));
    CHECK(none["verdict"] == "NONEXISTENT");
    CHECK(none["size"] == 5);
    CHECK(none["search"]["space_size"] == 14950);
    CHECK_FALSE(none["search"].contains("elapsed_seconds"));

    const auto dim = to_json(metric_dimension(GhgParams::diagonal(3)));
    CHECK(dim["dimension"] == 6);
    CHECK(dim["attempts"].size() == 2);
    // stable bytes
    CHECK(dim.dump() == to_json(metric_dimension(GhgParams::diagonal(3))).dump());
}

TEST_CASE("forbidden report documents") {
    const LandmarkSet tri(GhgParams::diagonal(3), {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    const auto doc = to_json(forbidden_scan(build_landmark_graph(tri)));
    CHECK(doc["schema"] == "hgmd.forbidden/1");
    REQUIRE(doc["configurations"].size() == 1);
    CHECK(doc["configurations"][0]["kind"] == "C3");
    CHECK(doc["configurations"][0]["landmarks"].size() == 3);
    CHECK(doc["configurations"][0]["colors"].size() == 3);
}
