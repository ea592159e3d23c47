#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latgraph/dsl.hpp"
#include "latgraph/pipeline.hpp"

#include <json.hpp>

using namespace latgraph;

TEST_CASE("graph expressions") {
    CHECK(parse_graph("petersen").same_edges(petersen()));
    CHECK(parse_graph("johnson(7,2)").same_edges(johnson(7, 2)));
    CHECK(parse_graph(" cartesian( complete(3) , cycle(4) ) ").same_edges(cartesian(complete(3), cycle(4))));
    CHECK(parse_graph("complement(schlafli)").same_edges(complement(schlafli())));
    CHECK(parse_graph("tensor(complete(3),cycle(4))").same_edges(direct(complete(3), cycle(4))));
    CHECK(parse_graph("disjoint_union(complete(3),2)").order() == 6);
    CHECK(parse_graph("line_graph(petersen)").order() == 15);
    CHECK(parse_graph("cartesian( complete(3),cycle(4))").label() == "cartesian(complete(3),cycle(4))");

    auto fails_at = [](const char* text, std::size_t pos) {
        CAPTURE(text);
        try {
            parse_graph(text);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.position() == pos);
        }
    };
    fails_at("", 0);
    fails_at("petersn", 0);
    fails_at("johnson(7)", 0);
    fails_at("johnson(7,2", 11);
    fails_at("cartesian(complete(3),4)", 22);
    fails_at("complete(petersen)", 9);
    fails_at("petersen x", 9);
    fails_at("complete(3),", 11);
    fails_at("cycle(2)", 0);  // constructor rejects the parameter
}

TEST_CASE("pipeline report for the Petersen graph") {
    PipelineReport r = run_pipeline(petersen());
    CHECK(r.vertex_transitive);
    CHECK(r.intersection_array == "{3,2;1,1}");
    REQUIRE(r.records.size() == 3);
    CHECK(r.records[0].eigenvalue == 3);
    CHECK(r.records[1].eigenvalue == 1);
    CHECK(r.records[1].lattice.names == std::vector<std::string>{"A5^2"});
    CHECK(r.records[2].eigenvalue == -2);
    CHECK(r.records[2].multiplicity == 4);
    CHECK(r.records[2].lattice.names == std::vector<std::string>{"A4_dual"});
    CHECK(r.records[2].lattice.kissing == 10);
    CHECK(r.records[2].lattice.strongly_eutactic);

    PipelineOptions only;
    only.eigenvalue = Rational(-2);
    CHECK(run_pipeline(petersen(), only).records.size() == 1);
    only.eigenvalue = Rational(2);
    CHECK_THROWS_AS(run_pipeline(petersen(), only), std::invalid_argument);
}

TEST_CASE("report JSON round-trips byte for byte") {
    for (const char* g : {"petersen", "empty(4)", "cartesian(complete(3),cycle(4))"}) {
        CAPTURE(g);
        std::string text = report_json(run_pipeline(parse_graph(g)));
        CHECK(nlohmann::ordered_json::parse(text).dump(2) == text);
    }
    std::string rows = outcomes_json(check_rows(table2_fixture(5)));
    CHECK(nlohmann::ordered_json::parse(rows).dump(2) == rows);
}

TEST_CASE("table fixtures") {
    CHECK(table1_fixture().size() == 14);
    CHECK(table2_fixture(7).size() == 8);
    CHECK_THROWS_AS(table2_fixture(12), std::invalid_argument);
    CHECK_THROWS_AS(table2_fixture(3), std::invalid_argument);

    auto ok = check_row({"petersen", -2, 4, "A4_dual"});
    CHECK(ok.ok);
    auto wrong = check_row({"petersen", -2, 5, "A4"});
    CHECK_FALSE(wrong.ok);
    CHECK(wrong.diff.find("multiplicity") != std::string::npos);
    CHECK(wrong.diff.find("expected A4") != std::string::npos);
    auto missing = check_row({"petersen", 2, 4, "A4"});
    CHECK_FALSE(missing.ok);
}

TEST_CASE("frame reports") {
    FrameReport exact = analyze_frame(simplex_etf(3));
    CHECK(exact.rational);
    REQUIRE(exact.lattice);
    CHECK(exact.lattice->names == std::vector<std::string>{"A3_dual"});
    CHECK(exact.rationality_identity.value_or(false));

    NumericFrame irr{{{1.0, 0.0}, {0.5, 0.8660254037844386}, {-0.5, 0.8660254037844386}}};
    // Gram ratios here are rational (1/2), so only the representative can fail
    FrameReport hex = analyze_numeric_frame(irr);
    CHECK_FALSE(hex.lattice.has_value());

    NumericFrame dense{{{1.0}, {1.4142135623730951}}};
    FrameReport d = analyze_numeric_frame(dense);
    CHECK_FALSE(d.rational);
    REQUIRE(d.discreteness);
    CHECK(d.discreteness->verdict == DiscretenessVerdict::likely_non_discrete);
    CHECK(nlohmann::json::parse(frame_report_json(d))["rational"] == false);
}
