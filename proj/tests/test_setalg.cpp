#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "iasl/setalg.hpp"

#include "oracles.hpp"
#include "util.hpp"

using iasl::GroundContext;
using iasl::GroundSet;
using iasl::IntSet;
using testutil::to_set;
using testutil::to_set_family;

TEST_CASE("sumset basics") {
    CHECK(iasl::sumset(IntSet{0}, IntSet{0, 2}) == IntSet{0, 2});
    CHECK(iasl::sumset(IntSet{1}, IntSet{1}) == IntSet{2});
    CHECK(iasl::sumset(IntSet{0, 1}, IntSet{0, 2}) == IntSet{0, 1, 2, 3});
    CHECK_THROWS_AS(iasl::sumset(IntSet{}, IntSet{1}), iasl::error);
    CHECK_THROWS_AS(iasl::sumset(IntSet{1}, IntSet{}), iasl::error);
}

TEST_CASE("sumset laws on random sets") {
    std::mt19937 rng(20240611);
    auto random_set = [&] {
        std::uniform_int_distribution<int> size_dist(1, 6);
        std::uniform_int_distribution<int> value_dist(0, 12);
        std::set<int> vals;
        int size = size_dist(rng);
        while (static_cast<int>(vals.size()) < size) vals.insert(value_dist(rng));
        return IntSet(std::vector<int>(vals.begin(), vals.end()));
    };
    for (int i = 0; i < 500; ++i) {
        IntSet a = random_set(), b = random_set(), c = random_set();
        IntSet ab = iasl::sumset(a, b);
        CHECK(ab == iasl::sumset(b, a));
        CHECK(iasl::sumset(ab, c) == iasl::sumset(a, iasl::sumset(b, c)));
        CHECK(iasl::sumset(IntSet{0}, a) == a);
        CHECK(ab.size() >= std::max(a.size(), b.size()));
        CHECK(ab.size() <= a.size() * b.size());
        CHECK(ab.min() == a.min() + b.min());
        CHECK(ab.max() == a.max() + b.max());
        // cross-check one product against the oracle
        CHECK(to_set(ab) == oracle::sum(to_set(a), to_set(b)));
    }
}

TEST_CASE("nontrivial representations, spec'd cases") {
    GroundSet x = GroundSet::parse("0,1,2");

    auto reps2 = iasl::nontrivial_representations(IntSet{2}, x);
    REQUIRE(reps2.size() == 1);
    CHECK(reps2[0].first == IntSet{1});
    CHECK(reps2[0].second == IntSet{1});
    CHECK(reps2[0].self_pair);

    auto reps12 = iasl::nontrivial_representations(IntSet{1, 2}, x);
    REQUIRE(reps12.size() == 1);
    CHECK(reps12[0].first == IntSet{1});
    CHECK(reps12[0].second == IntSet{0, 1});
    CHECK_FALSE(reps12[0].self_pair);

    CHECK(iasl::nontrivial_representations(IntSet{1}, x).empty());

    CHECK_THROWS_WITH(iasl::nontrivial_representations(IntSet{3}, x),
                      Catch::Matchers::ContainsSubstring("not a subset of ground set"));
    CHECK_THROWS_AS(iasl::nontrivial_representations(IntSet{}, x), iasl::error);
}

TEST_CASE("nontrivial representations agree with the quadratic oracle") {
    for (const char* ground : {"0,1,2", "0,1,3", "0,2,3", "0,1,2,3"}) {
        GroundSet x = GroundSet::parse(ground);
        std::set<int> xs = to_set(x.elements());
        for (const auto& c : oracle::nonempty_subsets(xs)) {
            auto expected = oracle::nontrivial_reps(c, xs);
            auto got = iasl::nontrivial_representations(testutil::from_set(c), x);
            REQUIRE(got.size() == expected.size());
            std::set<std::pair<std::set<int>, std::set<int>>> got_pairs, want_pairs;
            for (const auto& r : got) got_pairs.insert({to_set(r.first), to_set(r.second)});
            for (const auto& [a, b] : expected) want_pairs.insert({a, b});
            CHECK(got_pairs == want_pairs);
            for (const auto& r : got) CHECK(r.self_pair == (r.first == r.second));
        }
    }
}

TEST_CASE("structural families on small ground sets") {
    using Fam = std::set<std::set<int>>;
    SECTION("X = {0,1}") {
        auto s = iasl::compute_structural_sets(GroundSet::parse("0,1"));
        CHECK(to_set_family(s.sumset_free) == Fam{{0}, {1}, {0, 1}});
        CHECK(to_set_family(s.summand_free) == Fam{{1}, {0, 1}});
        CHECK(to_set_family(s.doubly_free) == Fam{{1}, {0, 1}});
        CHECK(s.rho() == 3);
        CHECK(s.rho_prime() == 2);
        CHECK(s.rho_second() == 2);
    }
    SECTION("X = {0,1,2}") {
        auto s = iasl::compute_structural_sets(GroundSet::parse("0,1,2"));
        CHECK(to_set_family(s.sumset_free) == Fam{{0}, {1}, {0, 1}, {0, 2}});
        CHECK(to_set_family(s.summand_free) == Fam{{2}, {0, 2}, {1, 2}, {0, 1, 2}});
        CHECK(to_set_family(s.doubly_free) == Fam{{0, 2}});
        CHECK(to_set_family(s.representable) == Fam{{2}, {1, 2}, {0, 1, 2}});
        CHECK(s.rho() == 4);
        CHECK(s.rho_prime() == 4);
        CHECK(s.rho_second() == 1);
    }
    SECTION("X = {0,1,2,3}") {
        auto s = iasl::compute_structural_sets(GroundSet::parse("0,1,2,3"));
        CHECK(to_set_family(s.sumset_free) ==
              Fam{{0}, {1}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 3}, {0, 2, 3}});
        CHECK(s.rho() == 7);
        CHECK(s.rho_prime() == 8);
    }
}

TEST_CASE("structural families match the brute-force oracle on every X in {0..4}") {
    for (unsigned extra = 0; extra < 16; ++extra) {
        std::set<int> xs{0};
        for (int v = 1; v <= 4; ++v)
            if (extra & (1u << (v - 1))) xs.insert(v);
        GroundSet x = GroundSet::create(testutil::from_set(xs));
        auto got = iasl::compute_structural_sets(x);
        auto want = oracle::structural_sets(xs);
        CHECK(to_set_family(got.sumset_free) == want.sumset_free);
        CHECK(to_set_family(got.summand_free) == want.summand_free);
        CHECK(to_set_family(got.doubly_free) == want.doubly_free);
        CHECK(to_set_family(got.representable) == want.representable);
    }
}

TEST_CASE("structural family invariants") {
    for (const char* ground : {"0,1", "0,1,2", "0,1,2,3", "0,2,5", "0,1,2,3,4"}) {
        GroundSet x = GroundSet::parse(ground);
        GroundContext ctx(x);
        auto s = iasl::compute_structural_sets(ctx);
        CAPTURE(ground);
        CHECK(s.sumset_free.contains(IntSet{0}));
        CHECK(s.summand_free.contains(x.elements()));  // X is never a non-trivial summand
        // doubly_free is exactly the intersection, representable the complement
        auto a = to_set_family(s.sumset_free);
        auto b = to_set_family(s.summand_free);
        std::set<std::set<int>> inter;
        for (const auto& m : a)
            if (b.count(m)) inter.insert(m);
        CHECK(to_set_family(s.doubly_free) == inter);
        CHECK(a.size() + to_set_family(s.representable).size() == (1u << x.size()) - 1);
        // every representable subset has at least one non-trivial representation
        for (const auto& m : s.representable.members())
            CHECK_FALSE(iasl::nontrivial_representations(m, x).empty());
        for (const auto& m : s.sumset_free.members())
            CHECK(iasl::nontrivial_representations(m, x).empty());
    }
}

TEST_CASE("degenerate ground set {0}") {
    auto s = iasl::compute_structural_sets(GroundSet::parse("0"));
    CHECK(s.rho() == 1);         // sumset_free = {{0}}
    CHECK(s.rho_prime() == 0);   // {0} is excluded by convention, nothing else exists
    CHECK(s.rho_second() == 0);
}

TEST_CASE("ground set validation") {
    CHECK_THROWS_WITH(GroundSet::parse("1,2"), Catch::Matchers::ContainsSubstring("contain 0"));
    CHECK_THROWS_AS(GroundSet::create(IntSet{}), iasl::error);
    CHECK_THROWS_AS(GroundSet::parse("0,1,2,3,4,5,6"), iasl::error);  // beyond the cap
    CHECK_THROWS_AS(IntSet::parse("0,x"), iasl::error);
    CHECK_THROWS_AS(IntSet({-1, 0}), iasl::error);
    CHECK(GroundSet::parse("0, 1").elements() == IntSet{0, 1});
}
