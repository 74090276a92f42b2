#include <catch2/catch_amalgamated.hpp>

#include "iasl/construct.hpp"
#include "iasl/dot.hpp"
#include "iasl/json_io.hpp"
#include "iasl/search.hpp"

#include "util.hpp"

using iasl::GroundSet;
using iasl::IntSet;

TEST_CASE("labeled-graph documents round-trip byte-identically") {
    for (const char* ground : {"0,1", "0,1,2", "0,1,2,3"}) {
        GroundSet x = GroundSet::parse(ground);
        auto w = iasl::construct_tiass_graph(x);
        iasl::GraphDocument doc{x, w.graph, w.labeling};
        std::string once = iasl::dump_document(iasl::to_json(doc));
        iasl::GraphDocument reloaded = iasl::load_graph_document(iasl::json::parse(once));
        std::string twice = iasl::dump_document(iasl::to_json(reloaded));
        CHECK(once == twice);
        REQUIRE(reloaded.labeling.has_value());
        CHECK(reloaded.labeling->labels() == w.labeling.labels());
        CHECK(reloaded.graph.edges() == w.graph.edges());
    }
}

TEST_CASE("labeling-only schema round-trips") {
    GroundSet x = GroundSet::parse("0,1,2");
    iasl::Labeling l = testutil::make_labeling(
        x, {{"a", IntSet{0}}, {"b", IntSet{1, 2}}, {"c", IntSet{0, 1, 2}}});
    std::string once = iasl::dump_document(iasl::labeling_to_json(l));
    iasl::Labeling back = iasl::labeling_from_json(iasl::json::parse(once));
    CHECK(back.labels() == l.labels());
    CHECK(back.ground() == l.ground());
    CHECK(iasl::dump_document(iasl::labeling_to_json(back)) == once);
}

TEST_CASE("graph-only schema round-trips") {
    iasl::Graph g = testutil::make_graph({"x", "y", "z"}, {{"y", "x"}, {"y", "z"}});
    std::string once = iasl::dump_document(iasl::graph_to_json(g));
    iasl::Graph back = iasl::graph_from_json(iasl::json::parse(once));
    CHECK(back.vertices() == g.vertices());
    CHECK(back.edges() == g.edges());
    CHECK(iasl::dump_document(iasl::graph_to_json(back)) == once);
}

TEST_CASE("document loader accepts unlabeled vertex forms") {
    auto doc1 = iasl::load_graph_document(iasl::json::parse(
        R"({"ground_set":[0,1],"vertices":["a","b"],"edges":[["a","b"]]})"));
    CHECK_FALSE(doc1.labeling.has_value());
    CHECK(doc1.graph.vertex_count() == 2);

    auto doc2 = iasl::load_graph_document(iasl::json::parse(
        R"({"ground_set":[0,1],"vertices":[{"id":"a"},{"id":"b"}],"edges":[]})"));
    CHECK_FALSE(doc2.labeling.has_value());

    CHECK_THROWS_WITH(iasl::load_graph_document(iasl::json::parse(
                          R"({"ground_set":[0,1],
                              "vertices":[{"id":"a","label":[0]},{"id":"b"}],
                              "edges":[]})")),
                      Catch::Matchers::ContainsSubstring("all vertices"));
    CHECK_THROWS_WITH(iasl::load_graph_document(iasl::json::parse(
                          R"({"ground_set":[1,2],"vertices":["a"],"edges":[]})")),
                      Catch::Matchers::ContainsSubstring("contain 0"));
    CHECK_THROWS_WITH(iasl::load_graph_document(iasl::json::parse(
                          R"({"ground_set":[0,1],"vertices":["a"],"edges":[["a","zz"]]})")),
                      Catch::Matchers::ContainsSubstring("unknown vertex"));
}

TEST_CASE("DOT rendering is deterministic and labeled") {
    auto w = iasl::construct_tiass_graph(GroundSet::parse("0,1"));
    std::string expected =
        "graph iasl {\n"
        "  \"v1\" [label=\"{0}\"];\n"
        "  \"v2\" [label=\"{1}\"];\n"
        "  \"v3\" [label=\"{0,1}\"];\n"
        "  \"v1\" -- \"v2\" [label=\"{1}\"];\n"
        "  \"v1\" -- \"v3\" [label=\"{0,1}\"];\n"
        "}\n";
    CHECK(iasl::to_dot(w.graph, &w.labeling) == expected);
}

TEST_CASE("search outcome serialization carries a reloadable witness") {
    GroundSet x = GroundSet::parse("0,1");
    iasl::Graph g = testutil::path3();
    auto out = iasl::decide(g, x, iasl::LabelClass::tiassl);
    REQUIRE(out.status == iasl::SearchStatus::sat);
    iasl::json j = iasl::to_json(out, g);
    CHECK(j.at("status") == "sat");
    CHECK(j.at("stats").contains("nodes"));
    auto doc = iasl::load_graph_document(j.at("witness"));
    REQUIRE(doc.labeling.has_value());
    CHECK(iasl::check(doc.graph, *doc.labeling, iasl::LabelClass::tiassl).pass);

    auto unsat = iasl::decide(testutil::triangle(), x, iasl::LabelClass::tiassl);
    iasl::json ju = iasl::to_json(unsat, testutil::triangle());
    CHECK(ju.at("status") == "unsat");
    CHECK_FALSE(ju.contains("witness"));
}

TEST_CASE("classification and bounds serialization") {
    GroundSet x = GroundSet::parse("0,1");
    auto w = iasl::construct_tiass_graph(x);
    iasl::json jc = iasl::to_json(iasl::classify(w.graph, w.labeling));
    REQUIRE(jc.at("classes").size() == 8);
    CHECK(jc.at("classes")[0].at("class") == "iasl");
    CHECK(jc.at("classes")[7].at("class") == "tiassi");
    CHECK(jc.at("classes")[7].at("pass") == false);
    CHECK(jc.at("classes")[7].contains("witness"));

    iasl::json jb = iasl::to_json(iasl::tiassl_bounds(x));
    CHECK(jb.at("max_edges") == 2);
    CHECK(jb.at("provenance").at("rho") == 3);

    iasl::json ja = iasl::to_json(iasl::audit(w.graph, w.labeling, iasl::tiassl_bounds(x)));
    CHECK(ja.at("pass") == true);
    CHECK(ja.at("vacuous") == false);
}
