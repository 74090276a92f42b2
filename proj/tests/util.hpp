#pragma once

// Shared test helpers: terse builders for graphs, labelings and the
// conversions between library values and the oracle's std::set world.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iasl/family.hpp"
#include "iasl/graph.hpp"
#include "iasl/ground.hpp"
#include "iasl/intset.hpp"
#include "iasl/labeling.hpp"

namespace testutil {

inline iasl::Graph make_graph(std::vector<std::string> vertices,
                              std::vector<std::pair<std::string, std::string>> edges) {
    return iasl::Graph::from_parts(vertices, edges);
}

inline iasl::Graph path3() {
    return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

inline iasl::Graph triangle() {
    return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline iasl::Graph star(int leaves) {
    std::vector<std::string> vs{"c"};
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= leaves; ++i) {
        vs.push_back("l" + std::to_string(i));
        es.emplace_back("c", "l" + std::to_string(i));
    }
    return make_graph(vs, es);
}

inline iasl::Labeling make_labeling(const iasl::GroundSet& x,
                                    std::vector<std::pair<std::string, iasl::IntSet>> labels) {
    std::map<std::string, iasl::IntSet> m(labels.begin(), labels.end());
    return iasl::Labeling(x, std::move(m));
}

inline std::set<int> to_set(const iasl::IntSet& s) {
    return std::set<int>(s.values().begin(), s.values().end());
}

inline std::set<std::set<int>> to_set_family(const iasl::SetFamily& fam) {
    std::set<std::set<int>> out;
    for (const auto& m : fam.members()) out.insert(to_set(m));
    return out;
}

inline iasl::IntSet from_set(const std::set<int>& s) {
    return iasl::IntSet(std::vector<int>(s.begin(), s.end()));
}

}  // namespace testutil
