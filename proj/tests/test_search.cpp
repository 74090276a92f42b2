#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "iasl/construct.hpp"
#include "iasl/search.hpp"

#include "oracles.hpp"
#include "util.hpp"

using iasl::GroundSet;
using iasl::IntSet;
using iasl::LabelClass;
using iasl::SearchStatus;
using testutil::make_graph;

TEST_CASE("decide on the named instances") {
    GroundSet x = GroundSet::parse("0,1");

    auto p3 = iasl::decide(testutil::path3(), x, LabelClass::tiassl);
    REQUIRE(p3.status == SearchStatus::sat);
    REQUIRE(p3.witness.has_value());
    CHECK(p3.witness->label_of("b") == IntSet{0});  // center
    CHECK(p3.witness->label_of("a") == IntSet{1});
    CHECK(p3.witness->label_of("c") == IntSet{0, 1});
    CHECK(iasl::check(testutil::path3(), *p3.witness, LabelClass::tiassl).pass);
    CHECK(p3.stats.nodes > 0);

    CHECK(iasl::decide(testutil::triangle(), x, LabelClass::tiassl).status ==
          SearchStatus::unsat);
    CHECK(iasl::decide(testutil::path3(), x, LabelClass::tiassi).status == SearchStatus::unsat);
}

TEST_CASE("budget handling") {
    // both |X| > max_ground and |V| > max_vertices: refuse up front
    GroundSet big = GroundSet::parse("0,1,2,3,4");
    auto refused = iasl::decide(testutil::star(8), big, LabelClass::tiassl);
    CHECK(refused.status == SearchStatus::inconclusive_budget);
    CHECK_THAT(refused.note, Catch::Matchers::ContainsSubstring("inconclusive: budget"));

    // node budget exhaustion is inconclusive, never unsat
    iasl::SearchBudget tiny;
    tiny.max_nodes = 2;
    auto starved = iasl::decide(testutil::star(6), GroundSet::parse("0,1,2"),
                                LabelClass::tiassl, true, tiny);
    CHECK(starved.status == SearchStatus::inconclusive_budget);
    CHECK_THAT(starved.note, Catch::Matchers::ContainsSubstring("node limit"));
}

TEST_CASE("decide agrees with the unpruned brute force, X={0,1}, n<=4") {
    GroundSet x = GroundSet::parse("0,1");
    iasl::SearchBudget no_orbits;
    no_orbits.orbit_anchoring = false;
    for (int n = 1; n <= 4; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code) {
            iasl::Graph g = iasl::detail::graph_from_code(code, n);
            for (LabelClass cls : iasl::kAllClasses) {
                for (bool strict : {true, false}) {
                    CAPTURE(n, code, iasl::to_string(cls), strict);
                    bool expected = oracle::exists_labeling(g, x, cls, strict);
                    auto got = iasl::decide(g, x, cls, strict);
                    REQUIRE(got.status != SearchStatus::inconclusive_budget);
                    CHECK((got.status == SearchStatus::sat) == expected);
                    // orbit anchoring never changes the verdict
                    auto plain = iasl::decide(g, x, cls, strict, no_orbits);
                    CHECK(plain.status == got.status);
                    if (got.witness) CHECK(iasl::check(g, *got.witness, cls, strict).pass);
                }
            }
        }
    }
}

TEST_CASE("decide agrees with the brute force on named graphs over {0,1,2}") {
    GroundSet x = GroundSet::parse("0,1,2");
    auto p4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    auto c4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
    const iasl::Graph graphs[] = {testutil::path3(), testutil::triangle(), testutil::star(3),
                                  p4, c4};
    for (const auto& g : graphs) {
        for (LabelClass cls :
             {LabelClass::tiasl, LabelClass::iassl, LabelClass::tiassl, LabelClass::tiassi,
              LabelClass::iasgl, LabelClass::tiasgl}) {
            CAPTURE(g.vertex_count(), g.edge_count(), iasl::to_string(cls));
            bool expected = oracle::exists_labeling(g, x, cls, true);
            auto got = iasl::decide(g, x, cls, true);
            REQUIRE(got.status != SearchStatus::inconclusive_budget);
            CHECK((got.status == SearchStatus::sat) == expected);
            if (got.witness) CHECK(iasl::check(g, *got.witness, cls, true).pass);
        }
    }
}

TEST_CASE("star theorem driver") {
    auto rep2 = iasl::verify_star_theorem(GroundSet::parse("0,1"));
    CHECK(rep2.pass);
    REQUIRE(rep2.rows.size() == 1);  // only P_3 on 3 vertices
    CHECK(rep2.rows[0].star);
    CHECK(rep2.rows[0].status == SearchStatus::sat);

    auto rep3 = iasl::verify_star_theorem(GroundSet::parse("0,1,2"));
    CHECK(rep3.pass);
    CHECK(rep3.rows.size() == 11);
    int sat = 0;
    for (const auto& row : rep3.rows)
        if (row.status == SearchStatus::sat) ++sat;
    CHECK(sat == 1);

    CHECK_THROWS_AS(iasl::verify_star_theorem(GroundSet::parse("0")), iasl::error);
    CHECK_THROWS_AS(iasl::verify_star_theorem(GroundSet::parse("0,1,2,3")), iasl::error);
}

TEST_CASE("no connected graph admits a tiassi (n <= 4, X = {0,1})") {
    auto rep = iasl::verify_no_connected_tiassi(4, GroundSet::parse("0,1"));
    CHECK(rep.pass);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.rows.size() == 1 + 1 + 2 + 6);
}

TEST_CASE("disconnected graphs are outside the tiassi proposition") {
    // The edgeless graph on all of P(X)-{{}} is a tiassi; it is disconnected,
    // so it is no counterexample to the connected-graph proposition.
    GroundSet x = GroundSet::parse("0,1");
    auto empty3 = make_graph({"a", "b", "c"}, {});
    auto out = iasl::decide(empty3, x, LabelClass::tiassi);
    REQUIRE(out.status == SearchStatus::sat);
    CHECK_FALSE(empty3.is_connected());
    CHECK(iasl::check(empty3, *out.witness, LabelClass::tiassi).pass);

    // P_3 plus two isolated vertices over {0,1,2} turns out to be unsat: the
    // only edge-capable label pair is {1},{0,1}, which cannot carry a path.
    GroundSet y = GroundSet::parse("0,1,2");
    auto p3_plus = make_graph({"a", "b", "c", "u", "w"}, {{"a", "b"}, {"b", "c"}});
    CHECK(iasl::decide(p3_plus, y, LabelClass::tiassi).status == SearchStatus::unsat);
}

TEST_CASE("tiasgl implies tiassl driver") {
    auto w = iasl::construct_tiass_graph(GroundSet::parse("0,1"));
    std::vector<std::pair<iasl::Graph, iasl::Labeling>> samples{{w.graph, w.labeling}};
    auto rep = iasl::verify_tiasgl_implies_tiassl(GroundSet::parse("0,1"), samples);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    CHECK(rep.tiasgl_found >= 1);           // the P_3 witness shows up in the sweep
    CHECK(rep.labelings_checked == 3 + 2 * 6 + 8 * 6 + 1);
}

TEST_CASE("search statistics are populated") {
    auto out = iasl::decide(testutil::star(6), GroundSet::parse("0,1,2"), LabelClass::tiassl);
    CHECK(out.status == SearchStatus::sat);
    CHECK(out.stats.nodes > 0);
    CHECK(out.stats.assignments >= out.stats.nodes - 1);
    CHECK(out.stats.wall_ms >= 0.0);
}
